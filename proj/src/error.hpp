#pragma once

#include <stdexcept>
#include <string>

namespace emlex {

enum class ErrorCode {
  Usage = 1,
  FileNotFound,
  DecodeError,
  EmptyDocument,
  ParseError,
  ValidationError,
  ConflictError,
  PatternSyntaxError,
  MissingAnnotations,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace emlex
