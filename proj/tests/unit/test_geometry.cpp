// SPDX-License-Identifier: Apache-2.0
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "k3q/error.hpp"
#include "k3q/geometry/geometry.hpp"
#include "k3q/groups/generators.hpp"
#include "k3q/groups/registry.hpp"

using namespace k3q::geometry;
using k3q::groups::parse_element;
using k3q::groups::registry_projective;

namespace {

// "6 | 4,4 | -": orbit lengths per fixer order 2, 3, 4.
std::string ruling_row(const std::string& label, Side side) {
  std::map<std::size_t, std::vector<std::size_t>> by_order;
  for (const auto& o : orbits_on_ruling(registry_projective(label), side)) by_order[o.fixer_order].push_back(o.length);
  std::ostringstream os;
  for (std::size_t order : {2, 3, 4}) {
    if (order != 2) os << " | ";
    const auto& v = by_order[order];
    if (v.empty()) os << "-";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  }
  return os.str();
}

}  // namespace

TEST_CASE("fix-lines of (q1,1)") {
  const auto m = parse_element("(q1,1)");
  const auto lines = fix_lines(m);
  REQUIRE(lines.size() == 2);
  CHECK_FALSE(intersection(lines[0], lines[1]).has_value());
  for (const auto& l : lines) {
    CHECK(l.type() == LineType::M);
    CHECK(fixes_pointwise(m, l));
    CHECK(in_quadric(l));
    CHECK(ruling_side(l) == Side::left);
    // Pluecker relation
    const auto& p = l.pluecker();
    CHECK((p[0] * p[5] - p[1] * p[4] + p[2] * p[3]).is_zero());
  }
  CHECK_THROWS_AS(fix_lines(Matrix4::identity()), k3q::DomainError);
  CHECK_THROWS_AS(fix_lines(-Matrix4::identity()), k3q::DomainError);
}

TEST_CASE("fix-line types") {
  for (const auto& l : fix_lines(parse_element("(p4,p4)"))) CHECK(l.type() == LineType::R);
  for (const auto& l : fix_lines(parse_element("(p3,p3)"))) CHECK(l.type() == LineType::N);
  // (p,p) rotates the imaginary quaternions: eigenvalues 1, 1, z, 1/z, so a
  // single fix-line plus two isolated fixed points.
  CHECK(fix_lines(parse_element("(p4,p4)")).size() == 1);
  CHECK(fix_lines(parse_element("(p3,p3)")).size() == 1);
  CHECK(fix_lines(parse_element("(q1,q1)")).size() == 2);
  CHECK(fix_lines(parse_element("(p3,1)")).size() == 2);
  CHECK(fix_lines(parse_element("(p4,1)")).size() == 2);
  CHECK(fix_lines(parse_element("(1,q2)")).size() == 2);
  for (const auto& l : fix_lines(parse_element("(1,q2)"))) CHECK(ruling_side(l) == Side::right);
}

TEST_CASE("element sides") {
  CHECK(is_left_element(parse_element("(p3,1)")));
  CHECK(is_right_element(parse_element("(1,p4)")));
  CHECK_FALSE(is_left_element(parse_element("(1,p3)")));
  CHECK_FALSE(is_left_element(parse_element("(p3,p3)")));
  CHECK_FALSE(is_right_element(parse_element("(p3,p3)")));
}

TEST_CASE("lines equal by Pluecker key regardless of spanning vectors") {
  const Vec4 a{1, 2, 0, 1}, b{0, 1, 1, 3};
  Vec4 c, d;
  const Vec4 twice_a{2, 4, 0, 2};
  for (int k = 0; k < 4; ++k) {
    c[k] = a[k] * AlgebraicScalar(3) + b[k];
    d[k] = a[k] - b[k] * k3q::algebra::constants::sqrt2();
  }
  CHECK(ProjectiveLine(a, b) == ProjectiveLine(c, d));
  CHECK_THROWS_AS(ProjectiveLine(a, twice_a), k3q::DomainError);
}

TEST_CASE("ruling action is the Moebius action of one factor") {
  // A left element moves left ruling lines and fixes every right ruling line.
  const auto g = parse_element("(p3,1)");
  const RulingPoint r{Side::right, {AlgebraicScalar(1), AlgebraicScalar(2)}};
  CHECK(ruling_action(g, r) == r);
  const RulingPoint l{Side::left, {AlgebraicScalar(1), AlgebraicScalar(2)}};
  CHECK(ruling_action(g, l).side == Side::left);
  CHECK_FALSE(ruling_action(g, l) == l);
  CHECK(ruling_point(ruling_line(l)) == l);
  CHECK(ruling_point(ruling_line(r)) == r);
  // order 3 on P^1
  CHECK(ruling_action(g, ruling_action(g, ruling_action(g, l))) == l);
}

TEST_CASE("ruling orbit tables") {
  struct Row {
    const char* label;
    const char* left;
    const char* right;
  };
  for (Row r : {Row{"TxV", "6 | 4,4 | -", "2,2,2 | - | -"}, Row{"OxT", "12 | 8 | 6", "6 | 4,4 | -"},
                Row{"TT1", "6 | - | -", "6 | - | -"}, Row{"OO2", "6 | 8 | -", "6 | 8 | -"},
                Row{"VxV", "2,2,2 | - | -", "2,2,2 | - | -"}, Row{"TxT", "6 | 4,4 | -", "6 | 4,4 | -"}}) {
    CAPTURE(r.label);
    CHECK(ruling_row(r.label, Side::left) == r.left);
    CHECK(ruling_row(r.label, Side::right) == r.right);
  }
}

TEST_CASE("base locus") {
  CHECK(base_locus(6).size() == 12);
  CHECK(base_locus(8).size() == 16);
  CHECK_THROWS_AS(base_locus(7), k3q::DomainError);
  for (int deg : {6, 8}) {
    const auto& pg = registry_projective(deg == 6 ? "TxT" : "OxO");
    for (Side s : {Side::left, Side::right}) {
      const auto& lines = base_locus(deg, s);
      for (const auto& l : lines) CHECK(ruling_side(l) == s);
      // invariant under the full group
      for (const auto& m : pg.source().generators())
        for (const auto& l : lines) CHECK(std::binary_search(lines.begin(), lines.end(), l.transformed(m)));
    }
  }
  // T-orbits on one ruling are {4, 4, 6}: the 6-orbit is the only candidate.
  std::vector<std::size_t> lengths;
  for (const auto& o : orbits_on_ruling(registry_projective("TxT"), Side::left)) lengths.push_back(o.length);
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{4, 4, 6});
}

TEST_CASE("meeting points of base lines") {
  const auto trivial = k3q::groups::FiniteMatrixGroup::generate("1", {});
  const auto pt = k3q::groups::projectivize(trivial);
  CHECK(meeting_point_orbits(pt, {base_locus(6, Side::left)[0]}, {base_locus(6, Side::right)[0]}) ==
        std::vector<std::size_t>{1});
  CHECK(meeting_point_orbits(registry_projective("TxV"), base_locus(6, Side::left), base_locus(6, Side::right)) ==
        std::vector<std::size_t>{12, 12, 12});
  CHECK(meeting_point_orbits(registry_projective("TT1"), base_locus(6, Side::left), base_locus(6, Side::right)) ==
        std::vector<std::size_t>{12, 12, 12});
  CHECK(meeting_point_orbits(registry_projective("OO2"), base_locus(8, Side::left), base_locus(8, Side::right)) ==
        std::vector<std::size_t>{32, 32});
  CHECK(meeting_point_orbits(registry_projective("TxT"), base_locus(8, Side::left), base_locus(8, Side::right)) ==
        std::vector<std::size_t>{16, 16, 16, 16});
}

TEST_CASE("orbit and stabilizer of fix-lines") {
  const auto& tt1 = registry_projective("TT1");
  const auto n = fix_lines(parse_element("(p3,p3)"));
  for (const auto& l : n) {
    if (in_quadric(l)) continue;
    CHECK(line_orbit(tt1, l).size() == 16);
    CHECK(fix_group(tt1, l).size() == 3);
    CHECK(stabilizer(tt1, l).size() == 3);
  }
  const auto& txv = registry_projective("TxV");
  for (const auto& l : fix_lines(parse_element("(q1,q1)"))) {
    CHECK(line_orbit(txv, l).size() == 6);
    CHECK(stabilizer(txv, l).size() / fix_group(txv, l).size() == 4);
  }
  const auto trivial = k3q::groups::FiniteMatrixGroup::generate("1", {});
  CHECK(line_orbit(k3q::groups::projectivize(trivial), n[0]).size() == 1);
}

TEST_CASE("random orbit-stabilizer checks") {
  std::mt19937 rng(11);
  std::vector<std::string> labels = {"TxV", "TT1", "VxV", "OxT", "OO2", "TxT"};
  for (int trial = 0; trial < 30; ++trial) {
    const auto& pg = registry_projective(labels[rng() % labels.size()]);
    const auto& m = pg.elements()[1 + rng() % (pg.order() - 1)];
    for (const auto& l : fix_lines(m)) CHECK(line_orbit(pg, l).size() * stabilizer(pg, l).size() == pg.order());
  }
}

TEST_CASE("points off the quadric") {
  for (const auto& l : fix_lines(parse_element("(q1,q1)")))
    if (!in_quadric(l)) CHECK(points_off_quadric(l, 6) == 4);
  for (const auto& l : fix_lines(parse_element("(p3,p3)")))
    if (!in_quadric(l)) CHECK(points_off_quadric(l, 6) == 6);
  for (const auto& l : fix_lines(parse_element("(p4,p4)")))
    if (!in_quadric(l)) CHECK(points_off_quadric(l, 8) == 8);
  CHECK_THROWS_AS(points_off_quadric(base_locus(6)[0], 6), k3q::DomainError);
}

TEST_CASE("every fix-line lies in a ruling or meets the quadric in two points") {
  for (const auto& l : all_fix_lines(registry_projective("OO2"))) {
    if (in_quadric(l)) {
      CHECK(ruling_side(l).has_value());
    } else {
      CHECK_FALSE(tangent_to_quadric(l));
    }
  }
}
