// SPDX-License-Identifier: Apache-2.0
#include <map>
#include <set>
#include <tuple>

#include "doctest.h"
#include "k3q/error.hpp"
#include "k3q/groups/generators.hpp"
#include "k3q/groups/group.hpp"
#include "k3q/singularities/singularities.hpp"

using namespace k3q::singularities;
using k3q::groups::parse_element;

namespace {

std::size_t count_classes(const k3q::groups::FiniteMatrixGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (const auto& h : g.elements()) seen[g.index_of(h.inverse() * g.elements()[i] * h)] = true;
  }
  return classes;
}

}  // namespace

TEST_CASE("ADE types") {
  CHECK(ADEType::parse("E_7") == ADEType('E', 7));
  CHECK(ADEType::parse("A3").rank() == 3);
  CHECK_THROWS_AS(ADEType('D', 3), k3q::DomainError);
  CHECK_THROWS_AS(ADEType('E', 9), k3q::DomainError);
  CHECK_THROWS_AS(ADEType('A', 0), k3q::DomainError);
}

TEST_CASE("binary quotient types") {
  CHECK(binary_quotient_type(BinaryGroupClass::parse("T")) == ADEType('E', 6));
  CHECK(binary_quotient_type(BinaryGroupClass::parse("Z4")) == ADEType('A', 7));
  CHECK(binary_quotient_type(BinaryGroupClass::parse("D3")) == ADEType('D', 5));
  CHECK(binary_quotient_type(BinaryGroupClass::parse("id")) == ADEType('A', 1));
  CHECK(binary_quotient_type(BinaryGroupClass::parse("Z2xZ2")) == ADEType('D', 4));
  CHECK(binary_quotient_type(BinaryGroupClass::parse("O")) == ADEType('E', 7));
  CHECK(binary_quotient_type(BinaryGroupClass::parse("I")) == ADEType('E', 8));
  CHECK(BinaryGroupClass::parse("Z_3").str() == "Z3");
  CHECK_THROWS_AS(BinaryGroupClass::parse("Q8"), k3q::DomainError);
}

TEST_CASE("McKay: rank + 1 equals the class number of the binary group") {
  using k3q::groups::FiniteMatrixGroup;
  const auto q8 = FiniteMatrixGroup::generate("Q8", {parse_element("(q1,1)"), parse_element("(q2,1)")});
  const auto bt = FiniteMatrixGroup::generate("2T", {parse_element("(q1,1)"), parse_element("(p3,1)")});
  const auto bo = FiniteMatrixGroup::generate("2O", {parse_element("(q2,1)"), parse_element("(p3,1)"), parse_element("(p4,1)")});
  const auto z8 = FiniteMatrixGroup::generate("Z8", {parse_element("(p4,1)")});
  CHECK(q8.order() == 8);
  CHECK(bt.order() == 24);
  CHECK(bo.order() == 48);
  CHECK(count_classes(q8) == static_cast<std::size_t>(binary_quotient_type(BinaryGroupClass::parse("Z2xZ2")).rank() + 1));
  CHECK(count_classes(bt) == static_cast<std::size_t>(binary_quotient_type(BinaryGroupClass::parse("T")).rank() + 1));
  CHECK(count_classes(bo) == static_cast<std::size_t>(binary_quotient_type(BinaryGroupClass::parse("O")).rank() + 1));
  CHECK(count_classes(z8) == static_cast<std::size_t>(binary_quotient_type(BinaryGroupClass::parse("Z4")).rank() + 1));
}

TEST_CASE("reports") {
  SingularityReport r;
  CHECK(r.str() == "-");
  r.add(2, ADEType('A', 1));
  r.add(1, ADEType('E', 7));
  r.add(1, ADEType('A', 1));
  CHECK(r.str() == "E_7+3A_1");
  CHECK(r.total_rank() == 10);
  CHECK(off_quadric_singularities(3, 6).str() == "6A_2");
  CHECK(off_quadric_singularities(4, 2).str() == "2A_3");
  CHECK(off_quadric_singularities(2, 0).empty());
  CHECK(quadric_point_singularity(3, 2) == ADEType('A', 2));
  CHECK(quadric_point_singularity(4, 3) == ADEType('A', 3));
  CHECK(quadric_point_singularity(2, 3) == ADEType('A', 1));
}

TEST_CASE("points of the quadric on base lines") {
  auto rows = [](const char* g, int d) {
    std::multiset<std::tuple<int, int, std::size_t, int, std::string>> out;
    for (const auto& c : quadric_point_classes(g, d)) out.insert({c.left_order, c.right_order, c.length, c.number, c.type.str()});
    return out;
  };
  using Row = std::tuple<int, int, std::size_t, int, std::string>;
  CHECK(rows("TxV", 6) == std::multiset<Row>{{3, 2, 8, 6, "A_2"}});
  CHECK(rows("OxT", 8) == std::multiset<Row>{{3, 2, 48, 1, "A_1"}, {4, 3, 24, 2, "A_3"}, {2, 3, 48, 2, "A_1"}});
  CHECK(rows("OO2", 8) == std::multiset<Row>{{2, 3, 48, 1, "A_1"}, {3, 2, 48, 1, "A_1"}});
  CHECK(rows("TxT", 8) == std::multiset<Row>{{3, 2, 24, 2, "A_1"}, {2, 3, 24, 2, "A_1"}});
  CHECK(quadric_point_classes("TT1", 6).empty());
  CHECK(quadric_point_classes("VxV", 6).empty());
}

TEST_CASE("off-quadric fix-line orbits") {
  struct Row {
    const char* cls;
    std::size_t length, fixer, ratio;
    int points;
  };
  auto check = [](const char* g, int d, std::vector<Row> expected) {
    CAPTURE(g);
    const auto got = off_quadric_line_orbits(g, d);
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].class_name == expected[k].cls);
      CHECK(got[k].orbit_length == expected[k].length);
      CHECK(got[k].fixer_order == expected[k].fixer);
      CHECK(got[k].ratio == expected[k].ratio);
      CHECK(got[k].points == expected[k].points);
    }
  };
  check("TxV", 6, {{"M1", 6, 2, 4, 4}, {"M2", 6, 2, 4, 4}, {"M3", 6, 2, 4, 4}});
  check("TT1", 6, {{"M1", 6, 2, 4, 4}, {"M2", 6, 2, 4, 4}, {"M3", 6, 2, 4, 4}, {"N", 16, 3, 1, 6}});
  std::vector<Row> vxv;
  for (const auto& c : line_classes("VxV")) vxv.push_back({c.name.c_str(), 2, 2, 4, 4});
  check("VxV", 6, vxv);
  // M' has |H_L|/|F_L| = 4: 36 * 8 = 288.
  check("OxT", 8, {{"M", 18, 2, 8, 8}, {"N", 32, 3, 3, 6}, {"M'", 36, 2, 4, 8}});
  // N, N' have ratio 6: 16 * 18 = 288.
  check("OO2", 8, {{"R", 18, 4, 4, 8}, {"N", 16, 3, 6, 6}, {"N'", 16, 3, 6, 6}, {"M", 72, 2, 2, 8}});
  check("TxT", 8, {{"M", 18, 2, 4, 8}, {"N", 16, 3, 3, 6}, {"N'", 16, 3, 3, 6}});
  CHECK_THROWS_AS(line_classes("OxO"), k3q::DomainError);
}

TEST_CASE("smooth fiber curve counts") {
  CHECK(nu_totals("TxV", 6, 0) == NuTotals{4, 12, 3, 0});
  CHECK(nu_totals("TT1", 6, 0) == NuTotals{2, 0, 15, 0});
  CHECK(nu_totals("VxV", 6, 0).nu() == 15);
  CHECK(nu_totals("OxT", 8, 0) == NuTotals{3, 9, 7, 0});
  CHECK(nu_totals("OO2", 8, 0) == NuTotals{2, 2, 14, 0});
  CHECK(nu_totals("TxT", 8, 0) == NuTotals{4, 4, 10, 0});
}

TEST_CASE("singular fibers") {
  const auto tt = nu_totals("TT1", 6, 1);
  CHECK(tt.nu4 == 18);
  CHECK(tt.nu() == 20);
  CHECK(nu_totals("TxV", 6, 1) == NuTotals{4, 12, 0, 4});
  CHECK(nu_totals("OO2", 8, 4) == NuTotals{2, 2, 6, 10});
  CHECK(node_singularities(builtin_node_data()[4]).str() == "3E_6");
  CHECK(builtin_node_data().size() == 24);
  CHECK_THROWS_WITH_AS(nu_totals("TxV", 6, 2, {}), "missing node data for TxV fiber 2", k3q::DomainError);
  std::vector<NodeOrbitRecord> bad = {{"TxV", 1, 12, 1, BinaryGroupClass::parse("Z2xZ2"), parse_meeting("Q:1")}};
  CHECK_THROWS_AS(nu_totals("TxV", 6, 1, bad), k3q::DomainError);
}

TEST_CASE("meeting annotations") {
  const auto m = parse_meeting("M1|M2|M3:3, N:4");
  REQUIRE(m.size() == 2);
  CHECK(m[0].classes == std::vector<std::string>{"M1", "M2", "M3"});
  CHECK(m[1].k == 4);
  CHECK(format_meeting(m) == "M1|M2|M3:3,N:4");
  CHECK(parse_meeting("-").empty());
  CHECK_THROWS_AS(parse_meeting("M1"), k3q::DomainError);
  CHECK_THROWS_AS(parse_meeting("M1:x"), k3q::DomainError);
}

TEST_CASE("node records are self-consistent") {
  for (const auto& r : builtin_node_data()) {
    CAPTURE(r.group);
    CHECK(r.node_count % r.orbit_count == 0);
    const bool six = r.group == "TxV" || r.group == "TT1" || r.group == "VxV";
    const int expected[2][4] = {{12, 48, 48, 12}, {24, 72, 144, 96}};
    CHECK(r.node_count == expected[six ? 0 : 1][r.fiber - 1]);
  }
}
