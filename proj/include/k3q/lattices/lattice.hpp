// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "k3q/singularities/singularities.hpp"

namespace k3q::lattices {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Named curves with self-intersections and intersection multiplicities.
class CurveGraph {
 public:
  /// Returns the index of the new curve. Throws DomainError on a duplicate name.
  std::size_t add_curve(const std::string& name, std::int64_t self = -2);
  /// Throws DomainError for unknown curves ("unknown curve X"), loops and mult < 1.
  /// Repeated edges add up.
  void add_edge(const std::string& a, const std::string& b, std::int64_t mult = 1);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::int64_t>& self_intersections() const noexcept { return self_; }
  /// Index of a curve; throws DomainError "unknown curve X".
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::int64_t multiplicity(std::size_t a, std::size_t b) const;

  friend bool operator==(const CurveGraph&, const CurveGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> self_;
  std::vector<std::vector<std::int64_t>> mult_;
};

/// Integral lattice given by a symmetric Gram matrix.
class IntegralLattice {
 public:
  IntegralLattice() = default;
  /// Throws DomainError if the matrix is not square and symmetric or the names do not match.
  explicit IntegralLattice(IntMatrix gram, std::vector<std::string> names = {});

  std::size_t rank() const noexcept { return gram_.size(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool is_even() const;
  /// u . v; throws DomainError on a length mismatch.
  BigInt pairing(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) const;

 private:
  IntMatrix gram_;
  std::vector<std::string> names_;
};

/// Integer coefficients in the basis of a lattice.
struct DivisorClass {
  std::string name;
  std::vector<std::int64_t> coeffs;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Finite abelian group Z/d1 x ... x Z/dk with d1 | d2 | ... and every di > 1.
struct DiscriminantGroup {
  std::vector<BigInt> invariant_factors;
  BigInt order() const;
  int p_rank(int p) const;
  std::string str() const;  ///< "Z2 x Z4", "0" for the trivial group
};

IntegralLattice gram_from_graph(const CurveGraph& g);
/// Negative definite root lattice with -2 on the diagonal; names "<prefix>1".."<prefix>n".
IntegralLattice ade_lattice(const singularities::ADEType& t, const std::string& prefix = "e");
IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

/// Signed determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(const IntMatrix& m);
/// Signed discriminant; 1 for the rank-0 lattice.
BigInt discriminant(const IntegralLattice& l);
/// Diagonal of the Smith normal form (nonnegative, each dividing the next, zeros last).
std::vector<BigInt> smith_invariants(const IntMatrix& m);
/// Throws DomainError for a degenerate lattice.
DiscriminantGroup discriminant_group(const IntegralLattice& l);
int p_rank(const IntegralLattice& l, int p);

/// v/p glues to an even overlattice: G v = 0 mod p and v.v = 0 mod 2p^2.
bool is_p_divisible(const IntegralLattice& l, const DivisorClass& v, int p);

/// Nikulin (p = 2: the odd-coefficient curves are 8 or 16 disjoint (-2)-curves)
/// and Tan (p = 3: the support mod 3 is six disjoint A_2 pairs with opposite
/// coefficients) counts. p = 4 is checked through its reduction mod 2.
/// Throws DomainError when the support is not made of disjoint (-2)-curves
/// (p = 2) or of disjoint (-2)-curve pairs (p = 3).
bool nikulin_count_check(const IntegralLattice& l, const DivisorClass& v, int p);

/// The lattice generated by l and v/p, in a reduced basis of the overlattice.
/// p = 1 returns l. Throws DomainError unless v is p-divisible and primitive mod p.
IntegralLattice adjoin_class(const IntegralLattice& l, const DivisorClass& v, int p);

/// d(W) = d(W') * (prod ps)^2.
bool index_formula_check(const BigInt& d_w, const BigInt& d_w2, const std::vector<int>& ps);

/// Self-intersection of the preimage of a curve under a cyclic cover of degree p:
/// s / p for a branch curve, p * s for an invariant unramified one.
/// Throws DomainError if a branch curve has s not divisible by p.
std::int64_t cover_self_intersection(std::int64_t s, bool ramified, int p);

/// p-rank of the discriminant group is at most 22 - picard_rank.
bool p_rank_bound_check(const IntegralLattice& l, int p, int picard_rank);

/// Hermite normal form (row style, positive pivots), zero rows dropped.
std::vector<std::vector<BigInt>> hermite_normal_form(std::vector<std::vector<BigInt>> rows);

}  // namespace k3q::lattices
