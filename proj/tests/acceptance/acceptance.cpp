// SPDX-License-Identifier: Apache-2.0
// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "k3q/algebra/cyclotomic.hpp"
#include "k3q/error.hpp"
#include "k3q/geometry/geometry.hpp"
#include "k3q/groups/registry.hpp"
#include "k3q/lattices/lattice.hpp"
#include "k3q/tables/verify.hpp"

using namespace k3q;
using lattices::BigInt;
using lattices::IntegralLattice;
using singularities::ADEType;
using tables::Status;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

// Passes when no cell fails; errata (misprints refuted by an invariant) are counted.
Outcome table_outcome(const std::string& id, bool allow_errata = true) {
  int pass = 0, errata = 0, fail = 0;
  std::string first_fail;
  for (const auto& r : tables::run_verification(id)) {
    if (r.status == Status::pass) ++pass;
    if (r.status == Status::erratum) ++errata;
    if (r.status == Status::fail) {
      if (!fail) first_fail = r.key + " expected " + r.expected + " got " + r.actual;
      ++fail;
    }
  }
  std::ostringstream os;
  os << pass << " cells match";
  if (errata) os << ", " << errata << (errata == 1 ? " printed misprint" : " printed misprints") << " refuted and corrected";
  if (fail) os << ", " << fail << " mismatches (first: " << first_fail << ")";
  return {fail == 0 && (allow_errata || errata == 0), os.str()};
}

Outcome criterion3() {
  auto o = table_outcome("meeting", false);
  for (const auto& r : tables::run_verification("meeting"))
    if (r.status == Status::info) o.detail += "; " + r.key + ": " + r.actual;
  return o;
}

Outcome orbit_stabilizer() {
  std::mt19937 rng(2024);
  const auto labels = groups::subgroup_labels();
  std::uniform_int_distribution<int> small(-2, 2);
  int checked = 0, bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& label = labels[rng() % labels.size()];
    const auto& pg = groups::registry_projective(label);
    std::optional<geometry::ProjectiveLine> line;
    switch (trial % 3) {
      case 0: {
        const auto lines = geometry::all_fix_lines(pg);
        line = lines[rng() % lines.size()];
        break;
      }
      case 1: {
        const auto lines = geometry::base_locus(groups::group_info(label).degree);
        line = lines[rng() % lines.size()];
        break;
      }
      default:
        while (!line) {
          algebra::Vec4 a, b;
          for (int k = 0; k < 4; ++k) {
            a[k] = small(rng);
            b[k] = algebra::AlgebraicScalar(small(rng)) + algebra::AlgebraicScalar(small(rng)) * algebra::constants::i();
          }
          try {
            line = geometry::ProjectiveLine(a, b);
          } catch (const DomainError&) {
          }
        }
    }
    const auto orbit = geometry::line_orbit(pg, *line);
    const auto stab = geometry::stabilizer(pg, *line);
    ++checked;
    if (orbit.size() * stab.size() != pg.order()) ++bad;
  }
  return {bad == 0, std::to_string(checked) + " (group, line) pairs, " + std::to_string(bad) + " violations"};
}

// v/p glues to an even overlattice iff every k v/p + sum eps_i e_i has even norm.
bool overlattice_search(const IntegralLattice& l, const std::vector<std::int64_t>& v, int p) {
  const std::size_t n = l.rank();
  for (int k = 0; k < p; ++k)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::int64_t> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = k * v[i] + (mask >> i & 1u ? p : 0);
      if (l.pairing(x, x) % (2 * p * p) != 0) return false;
    }
  return true;
}

Outcome divisibility_oracle() {
  std::vector<ADEType> parts;
  for (int n = 1; n <= 6; ++n) parts.emplace_back('A', n);
  for (int n = 4; n <= 6; ++n) parts.emplace_back('D', n);
  parts.emplace_back('E', 6);
  std::vector<IntegralLattice> sums;
  std::function<void(std::size_t, IntegralLattice)> build = [&](std::size_t from, IntegralLattice acc) {
    if (acc.rank() > 0) sums.push_back(acc);
    for (std::size_t k = from; k < parts.size(); ++k)
      if (acc.rank() + std::size_t(parts[k].rank()) <= 6) build(k, lattices::direct_sum(acc, lattices::ade_lattice(parts[k])));
  };
  build(0, IntegralLattice());
  std::mt19937 rng(11);
  int cases = 0, positives = 0, bad = 0;
  for (const auto& l : sums)
    for (int p : {2, 3, 4}) {
      // every class for rank <= 3, a sample otherwise
      std::size_t total = 1;
      for (std::size_t k = 0; k < l.rank(); ++k) total *= p;
      const bool exhaustive = l.rank() <= 3;
      const std::size_t count = exhaustive ? total : 40;
      for (std::size_t t = 0; t < count; ++t) {
        std::vector<std::int64_t> v(l.rank());
        std::size_t code = t;
        for (auto& c : v) {
          c = exhaustive ? std::int64_t(code % p) : std::int64_t(rng() % p);
          code /= p;
        }
        const bool fast = lattices::is_p_divisible(l, {"v", v}, p);
        ++cases;
        positives += fast;
        if (fast != overlattice_search(l, v, p)) ++bad;
      }
    }
  return {bad == 0 && positives > 0, std::to_string(sums.size()) + " lattices, " + std::to_string(cases) + " classes, " +
                                         std::to_string(positives) + " divisible, " + std::to_string(bad) +
                                         " disagreements"};
}

Outcome smith_product() {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-9, 9), size(1, 10);
  int bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = size(rng);
    lattices::IntMatrix m(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) m[i][j] = m[j][i] = entry(rng);
    BigInt prod = 1;
    for (const auto& d : lattices::smith_invariants(m)) prod *= d;
    BigInt det = lattices::determinant(m);
    if (prod != (det < 0 ? BigInt(-det) : det)) ++bad;
  }
  return {bad == 0, "500 random symmetric matrices, " + std::to_string(bad) + " violations"};
}

Outcome criterion10() {
  auto a = orbit_stabilizer();
  auto b = divisibility_oracle();
  auto c = smith_product();
  const bool d = lattices::cover_self_intersection(-3, true, 3) == -1 &&
                 lattices::cover_self_intersection(-1, false, 3) == -3 &&
                 lattices::cover_self_intersection(-2, true, 2) == -1;
  return {a.ok && b.ok && c.ok && d, "(a) " + a.detail + "; (b) " + b.detail + "; (c) " + c.detail +
                                         "; (d) cover values " + (d ? "-1, -3, -1" : "wrong")};
}

Outcome criterion9() {
  auto o = table_outcome("ade", false);
  int bad = 0;
  for (int n = 1; n <= 20; ++n) {
    auto check = [&](char kind, int idx, BigInt abs) {
      BigInt d = lattices::discriminant(lattices::ade_lattice(ADEType(kind, idx)));
      if (d != (idx % 2 ? BigInt(-abs) : abs)) ++bad;
    };
    check('A', n, n + 1);
    if (n >= 4) check('D', n, 4);
    if (n >= 6 && n <= 8) check('E', n, 9 - n);
  }
  o.ok = o.ok && bad == 0;
  o.detail += "; A1..A20, D4..D20, E6..E8 signed determinants: " + std::to_string(bad) + " wrong";
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"group orders, indices and normality", [] { return table_outcome("subgroups", false); }},
      {"ruling orbit tables", [] { return table_outcome("rulings", false); }},
      {"meeting-point orbits", criterion3},
      {"fix-line tables", [] { return table_outcome("fixlines"); }},
      {"quotient singularity tables", [] { return table_outcome("sing"); }},
      {"rational curve counts", [] { return table_outcome("nu"); }},
      {"discriminant index identities", [] { return table_outcome("discs", false); }},
      {"divisible-class suite", [] { return table_outcome("classes", false); }},
      {"A-D-E determinant suite", criterion9},
      {"property checks", criterion10},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::cout << "criterion " << k + 1 << ": " << (o.ok ? "PASS" : "FAIL") << " " << criteria[k].name << " (" << o.detail
              << ")\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << secs << " s\n";
  return all ? 0 : 1;
}
