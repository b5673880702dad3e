// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace k3q::tables {

/// Rows of string cells under a fixed header.
struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

enum class Format { tsv, markdown };
/// "tsv" or "markdown"; throws DomainError otherwise.
Format parse_format(std::string_view name);

/// TSV: tab-separated, header row first, LF endings; tabs and newlines inside
/// cells become spaces. Markdown: a pipe table with '|' escaped.
std::string emit_report(const Report& r, Format f);

}  // namespace k3q::tables
