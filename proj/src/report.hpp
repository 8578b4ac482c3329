#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace emlex {

using Cell = std::variant<std::string, std::int64_t>;

struct Report {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::string provenance;  // corpus id + config hash

  void add_row(std::vector<Cell> row);

  std::string to_tsv() const;   // includes a "# provenance:" header line
  std::string to_json() const;
};

std::string cell_text(const Cell& cell);

}  // namespace emlex
