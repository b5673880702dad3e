// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3q/tables/config.hpp"
#include "k3q/tables/report.hpp"

namespace k3q::tables {

/// One printed value. `corrected` is set for known misprints: the cell is
/// reported as an erratum (not a failure) when the computed value equals it and
/// an independent invariant rules the printed value out.
struct ExpectedCell {
  std::string key;
  std::string expected;
  std::string source;  ///< which printed table or statement the value comes from
  std::string corrected = {};
};

struct ExpectedTable {
  std::string id;
  std::string title;
  std::vector<ExpectedCell> cells;
};

/// subgroups, rulings, meeting, fixlines, sing, nu, classes, discs, ade.
const std::vector<ExpectedTable>& expected_tables();
/// Throws DomainError "unknown table X".
const ExpectedTable& expected_table(std::string_view id);

enum class Status { pass, fail, erratum, info };
std::string to_string(Status s);

struct CellResult {
  std::string table;
  std::string key;
  std::string expected;
  std::string actual;
  Status status;
  std::string note;
};

/// Recomputes every cell of one table ("all" for every table) and compares.
/// Info rows record computations with no printed counterpart.
/// Throws DomainError "unknown table X".
std::vector<CellResult> run_verification(std::string_view scope = "all");
bool all_passed(const std::vector<CellResult>& results);  ///< no fail rows
Report verification_report(const std::vector<CellResult>& results);

/// Support lattices and classes of the divisible-class suite, as data files.
struct DivisibleCase {
  std::string label;  ///< surface and class
  int p;
  std::string config;  ///< defines one class named "v"
};
const std::vector<DivisibleCase>& divisible_cases();

/// Printed discriminant pairs d(W) -> d(W') with the primes of the adjoined classes.
struct IndexCase {
  std::string label;
  std::string d_w;   ///< e.g. "-2^4*3^3*5"
  std::string d_w2;
  std::vector<int> ps;
};
const std::vector<IndexCase>& index_cases();
/// "-2^4*3^3*5" -> -2160. Throws DomainError on bad syntax.
lattices::BigInt parse_factored(std::string_view text);

}  // namespace k3q::tables
