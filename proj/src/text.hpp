#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace emlex::text {

struct Decoded {
  char32_t cp;
  std::size_t size;
};

// Decodes one UTF-8 scalar starting at pos. Invalid bytes decode as U+FFFD
// with size 1 so scanning always makes progress.
Decoded decode_utf8(std::string_view s, std::size_t pos);

// First byte offset of a malformed UTF-8 sequence, or npos when clean.
std::size_t find_invalid_utf8(std::string_view s);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_apostrophe(char32_t cp);  // U+0027, U+2018, U+2019
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
char32_t to_lower(char32_t cp);

void append_utf8(std::string& out, char32_t cp);

// Lowercases and maps curly apostrophes to U+0027. Lookup keys and census
// grouping both use this.
std::string fold(std::string_view s);

// Folded alphabetic characters only (apostrophes, hyphens, digits dropped).
std::string letters_only(std::string_view s);

std::size_t letter_count(std::string_view s);

}  // namespace emlex::text
