// SPDX-License-Identifier: Apache-2.0
#include "k3q/tables/report.hpp"

#include "k3q/error.hpp"

namespace k3q::tables {

namespace {

std::string tsv_cell(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return out;
}

void md_row(std::string& out, const std::vector<std::string>& cells) {
  out += '|';
  for (const auto& c : cells) out += ' ' + md_cell(c) + " |";
  out += '\n';
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "tsv") return Format::tsv;
  if (name == "markdown" || name == "md") return Format::markdown;
  throw DomainError("unknown format " + std::string(name));
}

std::string emit_report(const Report& r, Format f) {
  std::string out;
  if (f == Format::tsv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? "\t" : "") + tsv_cell(cells[k]);
      out += '\n';
    };
    line(r.columns);
    for (const auto& row : r.rows) line(row);
    return out;
  }
  md_row(out, r.columns);
  out += '|';
  for (std::size_t k = 0; k < r.columns.size(); ++k) out += "---|";
  out += '\n';
  for (const auto& row : r.rows) md_row(out, row);
  return out;
}

}  // namespace k3q::tables
