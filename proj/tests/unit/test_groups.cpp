// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <set>

#include "doctest.h"
#include "k3q/error.hpp"
#include "k3q/groups/generators.hpp"
#include "k3q/groups/group.hpp"
#include "k3q/groups/registry.hpp"

using namespace k3q::groups;

TEST_CASE("trivial group") {
  const auto g = FiniteMatrixGroup::generate("1", {});
  CHECK(g.order() == 1);
  CHECK(projectivize(g).order() == 1);
  CHECK(element_order(Matrix4::identity()) == 1);
  const auto pg = projectivize(g);
  const auto classes = conjugacy_classes(pg);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].size() == 1);
}

TEST_CASE("closure cap") {
  std::vector<Matrix4> gens;
  for (const char* w : {"(q2,1)", "(1,q2)", "(p3,1)", "(1,p3)", "(p4,1)", "(1,p4)"}) gens.push_back(parse_element(w));
  CHECK_THROWS_WITH_AS(FiniteMatrixGroup::generate("OxO", gens, 100), "group too large or not finite", k3q::DomainError);
  Matrix4 scale = Matrix4::scalar(k3q::algebra::AlgebraicScalar(2));
  CHECK_THROWS_WITH_AS(FiniteMatrixGroup::generate("inf", {scale}, 20), "group too large or not finite", k3q::DomainError);
  CHECK_THROWS_AS(FiniteMatrixGroup::generate("inf", {scale}), k3q::Error);
}

TEST_CASE("registered subgroup orders and indices") {
  struct Row {
    const char* label;
    std::size_t order, index;
  };
  for (Row r : {Row{"TxV", 96, 3}, Row{"TT1", 96, 3}, Row{"VxV", 32, 9}, Row{"OxT", 576, 2}, Row{"OO2", 576, 2},
                Row{"TxT", 288, 4}}) {
    CAPTURE(r.label);
    const auto& h = registry_group(r.label);
    const auto& g = registry_group(group_info(r.label).parent);
    CHECK(h.order() == r.order);
    CHECK(is_subgroup(h, g));
    CHECK(is_normal(h, g));
    CHECK(index(h, g) == r.index);
    // -1 lies in every group, so the projective order is half.
    CHECK(registry_projective(r.label).order() * 2 == r.order);
  }
  CHECK(registry_group("OxO").order() == 1152);
  CHECK(registry_projective("TxT").order() == 144);
  CHECK(registry_projective("VxV").order() == 16);
}

TEST_CASE("the ambient T x T from either generator list agree") {
  std::vector<Matrix4> gens;
  for (const char* w : {"(q2,1)", "(1,q2)", "(p3,1)", "(1,p3)"}) gens.push_back(parse_element(w));
  const auto t = FiniteMatrixGroup::generate("TxT'", gens);
  CHECK(t.order() == 288);
  for (const auto& m : t.elements()) CHECK(registry_group("TxT").contains(m));
}

TEST_CASE("normality, containment and index errors") {
  const auto& g = registry_group("TxT");
  CHECK(is_normal(g, g));
  CHECK(index(g, g) == 1);
  CHECK_FALSE(is_subgroup(registry_group("OxT"), registry_group("TxT")));
  CHECK_THROWS_AS(index(registry_group("OxT"), registry_group("TxT")), k3q::DomainError);
  // (TT)' and T x V are both index 3 but different.
  CHECK_FALSE(is_subgroup(registry_group("TT1"), registry_group("TxV")));
  // a non-normal subgroup: the diagonal copy of T
  const auto diag = FiniteMatrixGroup::generate("diagT", {parse_element("(q1,q1)"), parse_element("(p3,p3)")});
  CHECK(is_subgroup(diag, g));
  CHECK_FALSE(is_normal(diag, g));
}

TEST_CASE("element orders divide 24 and regeneration is idempotent") {
  for (const auto& info : registry()) {
    const auto& g = registry_group(info.label);
    std::set<int> orders;
    for (const auto& m : g.elements()) orders.insert(element_order(m));
    for (int o : orders) CHECK(24 % o == 0);
  }
  const auto& v = registry_group("VxV");
  const auto again = FiniteMatrixGroup::generate("VxV", v.elements());
  CHECK(again.order() == v.order());
  for (const auto& m : again.elements()) CHECK(v.contains(m));
}

TEST_CASE("conjugation by C") {
  const auto t = FiniteMatrixGroup::generate(
      "TT1", {parse_element("(q1,1)"), parse_element("(1,q1)"), parse_element("(q2,1)"), parse_element("(1,q2)"),
              parse_element("(p3,p3)")});
  const auto tc = conjugate_group(t, swap_matrix());
  CHECK(tc.order() == 96);
  // C swaps the factors, so T x V goes to V x T.
  const auto& txv = registry_group("TxV");
  const auto vxt = conjugate_group(txv, swap_matrix());
  CHECK(vxt.order() == 96);
  CHECK(vxt.contains(parse_element("(1,p3)")));
  CHECK_FALSE(vxt.contains(parse_element("(p3,1)")));
}

TEST_CASE("conjugacy classes of P(V x V)") {
  const auto& pg = registry_projective("VxV");
  const auto classes = conjugacy_classes(pg);
  // P(V x V) = (Z2)^4 is abelian: every class is a singleton.
  CHECK(classes.size() == 16);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const std::string w = "(q" + std::to_string(i) + ",q" + std::to_string(j) + ")";
      const std::size_t idx = pg.index_of(parse_element(w));
      for (const auto& c : classes)
        if (c.front() == idx || c.back() == idx) CHECK(c.size() == 1);
    }
  std::size_t total = 0;
  for (const auto& c : conjugacy_classes(registry_projective("TxT"))) total += c.size();
  CHECK(total == 144);
}

TEST_CASE("projective orders") {
  CHECK(projective_order(parse_element("(q1,1)")) == 2);
  CHECK(projective_order(parse_element("(p3,p3)")) == 3);
  CHECK(projective_order(parse_element("(p4,p4)")) == 4);
  CHECK(projective_order(-Matrix4::identity()) == 1);
}

TEST_CASE("registry lookups") {
  CHECK(registry().size() == 7);
  CHECK_THROWS_WITH_AS(registry_group("IxI"), "unknown group IxI", k3q::DomainError);
  CHECK(group_info("OO2").display == "(OO)''");
}
