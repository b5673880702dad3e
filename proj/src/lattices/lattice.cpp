// SPDX-License-Identifier: Apache-2.0
#include "k3q/lattices/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "k3q/error.hpp"

namespace k3q::lattices {

using BigMatrix = std::vector<std::vector<BigInt>>;

namespace {

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

// ---- CurveGraph ------------------------------------------------------------

std::size_t CurveGraph::add_curve(const std::string& name, std::int64_t self) {
  if (contains(name)) throw DomainError("duplicate curve " + name);
  names_.push_back(name);
  self_.push_back(self);
  for (auto& row : mult_) row.push_back(0);
  mult_.emplace_back(names_.size(), 0);
  return names_.size() - 1;
}

void CurveGraph::add_edge(const std::string& a, const std::string& b, std::int64_t mult) {
  const std::size_t i = index_of(a);
  const std::size_t j = index_of(b);
  if (i == j) throw DomainError("self-loop on curve " + a);
  if (mult < 1) throw DomainError("edge multiplicity must be positive");
  mult_[i][j] += mult;
  mult_[j][i] += mult;
}

std::size_t CurveGraph::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw DomainError("unknown curve " + std::string(name));
  return static_cast<std::size_t>(it - names_.begin());
}

bool CurveGraph::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::int64_t CurveGraph::multiplicity(std::size_t a, std::size_t b) const { return mult_.at(a).at(b); }

// ---- IntegralLattice -------------------------------------------------------

IntegralLattice::IntegralLattice(IntMatrix gram, std::vector<std::string> names)
    : gram_(std::move(gram)), names_(std::move(names)) {
  const std::size_t n = gram_.size();
  for (const auto& row : gram_)
    if (row.size() != n) throw DomainError("Gram matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw DomainError("Gram matrix must be symmetric");
  if (!names_.empty() && names_.size() != n) throw DomainError("basis names do not match the rank");
}

bool IntegralLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_[i][i] % 2 != 0) return false;
  return true;
}

BigInt IntegralLattice::pairing(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) const {
  if (u.size() != rank() || v.size() != rank()) throw DomainError("class length does not match the lattice rank");
  BigInt s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (v[j] != 0 && gram_[i][j] != 0) s += BigInt(u[i]) * gram_[i][j] * v[j];
  }
  return s;
}

BigInt DiscriminantGroup::order() const {
  BigInt o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

int DiscriminantGroup::p_rank(int p) const {
  return static_cast<int>(std::count_if(invariant_factors.begin(), invariant_factors.end(),
                                        [p](const BigInt& d) { return d % p == 0; }));
}

std::string DiscriminantGroup::str() const {
  if (invariant_factors.empty()) return "0";
  std::string out;
  for (const auto& d : invariant_factors) out += (out.empty() ? "Z" : " x Z") + d.str();
  return out;
}

IntegralLattice gram_from_graph(const CurveGraph& g) {
  const std::size_t n = g.size();
  IntMatrix gram(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = i == j ? g.self_intersections()[i] : g.multiplicity(i, j);
  return IntegralLattice(std::move(gram), g.names());
}

IntegralLattice ade_lattice(const singularities::ADEType& t, const std::string& prefix) {
  const int n = t.rank();
  IntMatrix gram(n, std::vector<std::int64_t>(n, 0));
  auto link = [&](int a, int b) { gram[a][b] = gram[b][a] = 1; };
  for (int i = 0; i < n; ++i) gram[i][i] = -2;
  switch (t.kind()) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'D':
      // chain 0 - 1 - ... - (n-2), with n-1 attached to n-3
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      // chain 0 - 1 - ... - (n-2), with n-1 attached to 2
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(2, n - 1);
      break;
  }
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return IntegralLattice(std::move(gram), std::move(names));
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix gram(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) gram[i][j] = a.gram()[i][j];
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) gram[a.rank() + i][a.rank() + j] = b.gram()[i][j];
  std::vector<std::string> names;
  if (!a.names().empty() && !b.names().empty()) {
    names = a.names();
    names.insert(names.end(), b.names().begin(), b.names().end());
  }
  return IntegralLattice(std::move(gram), std::move(names));
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigMatrix a = to_big(m);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt discriminant(const IntegralLattice& l) { return determinant(l.gram()); }

std::vector<BigInt> smith_invariants(const IntMatrix& m) {
  BigMatrix a = to_big(m);
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t steps = std::min(rows, cols);
  std::vector<BigInt> diag;

  // Moves the nonzero entry of least absolute value in the block [t.., t..] to (t, t).
  auto place_pivot = [&](std::size_t t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (bi == rows || abs_big(a[i][j]) < abs_big(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) return false;
    std::swap(a[t], a[bi]);
    for (auto& row : a) std::swap(row[t], row[bj]);
    return true;
  };

  for (std::size_t t = 0; t < steps; ++t) {
    if (!place_pivot(t)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        place_pivot(t);
        continue;
      }
      // The pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs_big(a[t][t]));
  }
  diag.resize(steps, 0);
  return diag;
}

DiscriminantGroup discriminant_group(const IntegralLattice& l) {
  DiscriminantGroup g;
  for (const auto& d : smith_invariants(l.gram())) {
    if (d == 0) throw DomainError("degenerate lattice");
    if (d != 1) g.invariant_factors.push_back(d);
  }
  return g;
}

int p_rank(const IntegralLattice& l, int p) { return discriminant_group(l).p_rank(p); }

bool is_p_divisible(const IntegralLattice& l, const DivisorClass& v, int p) {
  if (p < 1) throw DomainError("p must be positive");
  if (v.coeffs.size() != l.rank()) throw DomainError("class length does not match the lattice rank");
  for (std::size_t i = 0; i < l.rank(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < l.rank(); ++j) s += BigInt(l.gram()[i][j]) * v.coeffs[j];
    if (s % p != 0) return false;
  }
  return l.pairing(v.coeffs, v.coeffs) % (2 * p * p) == 0;
}

bool nikulin_count_check(const IntegralLattice& l, const DivisorClass& v, int p) {
  if (v.coeffs.size() != l.rank()) throw DomainError("class length does not match the lattice rank");
  auto name = [&](std::size_t i) { return l.names().empty() ? "#" + std::to_string(i + 1) : l.names()[i]; };
  if (p == 2 || p == 4) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < l.rank(); ++i)
      if (mod(v.coeffs[i], 2) != 0) support.push_back(i);
    for (std::size_t a = 0; a < support.size(); ++a) {
      if (l.gram()[support[a]][support[a]] != -2) throw DomainError(name(support[a]) + " is not a (-2)-curve");
      for (std::size_t b = a + 1; b < support.size(); ++b)
        if (l.gram()[support[a]][support[b]] != 0)
          throw DomainError("curves " + name(support[a]) + " and " + name(support[b]) + " of the support meet");
    }
    return support.size() == 8 || support.size() == 16;
  }
  if (p == 3) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < l.rank(); ++i)
      if (mod(v.coeffs[i], 3) != 0) support.push_back(i);
    int pairs = 0;
    bool opposite = true;
    for (std::size_t i : support) {
      if (l.gram()[i][i] != -2) throw DomainError(name(i) + " is not a (-2)-curve");
      std::vector<std::size_t> nbrs;
      for (std::size_t j : support)
        if (j != i && l.gram()[i][j] != 0) nbrs.push_back(j);
      if (nbrs.size() != 1 || l.gram()[i][nbrs[0]] != 1) throw DomainError(name(i) + " is not in a disjoint A_2 pair");
      if (i < nbrs[0]) {
        ++pairs;
        if (mod(v.coeffs[i] + v.coeffs[nbrs[0]], 3) != 0) opposite = false;
      }
    }
    return pairs == 6 && opposite;
  }
  throw DomainError("Nikulin check needs p = 2, 3 or 4");
}

std::vector<std::vector<BigInt>> hermite_normal_form(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    // Euclid on column c among rows lead..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = lead; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || abs_big(rows[r][c]) < abs_big(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[lead], rows[best]);
      bool done = true;
      for (std::size_t r = lead + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const BigInt q = rows[r][c] / rows[lead][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] -= q * rows[lead][j];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[lead][c] == 0) continue;
    if (rows[lead][c] < 0)
      for (auto& x : rows[lead]) x = -x;
    for (std::size_t r = 0; r < lead; ++r) {
      BigInt q = rows[r][c] / rows[lead][c];
      if (rows[r][c] - q * rows[lead][c] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) rows[r][j] -= q * rows[lead][j];
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

IntegralLattice adjoin_class(const IntegralLattice& l, const DivisorClass& v, int p) {
  if (p == 1) return l;
  if (!is_p_divisible(l, v, p)) throw DomainError("class " + v.name + " is not " + std::to_string(p) + "-divisible");
  if (std::none_of(v.coeffs.begin(), v.coeffs.end(), [p](std::int64_t c) { return std::gcd(c, std::int64_t{p}) == 1; }))
    throw DomainError("class " + v.name + " is not primitive modulo " + std::to_string(p));
  const std::size_t n = l.rank();
  BigMatrix gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.emplace_back(n, 0);
    gens.back()[i] = p;
  }
  gens.emplace_back(v.coeffs.begin(), v.coeffs.end());
  const BigMatrix b = hermite_normal_form(std::move(gens));  // rows of p * (new basis)
  const BigInt p2 = BigInt(p) * p;
  IntMatrix gram(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (b[i][k] == 0) continue;
        for (std::size_t m = 0; m < n; ++m)
          if (b[j][m] != 0 && l.gram()[k][m] != 0) s += b[i][k] * l.gram()[k][m] * b[j][m];
      }
      if (s % p2 != 0) throw DomainError("overlattice is not integral");
      gram[i][j] = static_cast<std::int64_t>(s / p2);
    }
  return IntegralLattice(std::move(gram));
}

bool index_formula_check(const BigInt& d_w, const BigInt& d_w2, const std::vector<int>& ps) {
  BigInt index = 1;
  for (int p : ps) index *= p;
  return d_w == d_w2 * index * index;
}

std::int64_t cover_self_intersection(std::int64_t s, bool ramified, int p) {
  if (p < 2) throw DomainError("cover degree must be at least 2");
  if (!ramified) return p * s;
  if (s % p != 0) throw DomainError("branch curve self-intersection must be divisible by the degree");
  return s / p;
}

bool p_rank_bound_check(const IntegralLattice& l, int p, int picard_rank) {
  return p_rank(l, p) <= 22 - picard_rank;
}

}  // namespace k3q::lattices
