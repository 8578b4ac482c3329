#include "report.hpp"

#include <nlohmann/json.hpp>

#include "error.hpp"

namespace emlex {

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw Error(ErrorCode::InvalidArgument,
                "report '" + title + "': row has " +
                    std::to_string(row.size()) + " cells, expected " +
                    std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

std::string cell_text(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  return std::to_string(std::get<std::int64_t>(cell));
}

std::string Report::to_tsv() const {
  std::string out = "# provenance: " + provenance + "\n";
  out += "# title: " + title + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += "\t";
    out += columns[i];
  }
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "\t";
      out += cell_text(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title;
  j["provenance"] = provenance;
  j["columns"] = columns;
  auto& jrows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    auto jrow = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      if (const auto* s = std::get_if<std::string>(&cell))
        jrow.push_back(*s);
      else
        jrow.push_back(std::get<std::int64_t>(cell));
    }
    jrows.push_back(std::move(jrow));
  }
  return j.dump(2) + "\n";
}

}  // namespace emlex
