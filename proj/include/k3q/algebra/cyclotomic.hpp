// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

#include "k3q/algebra/rational.hpp"

namespace k3q::algebra {

/// Element of the cyclotomic field Q(zeta), zeta a primitive 24th root of unity.
///
/// Stored as coordinates in the power basis 1, zeta, ..., zeta^7, reduced modulo
/// the 24th cyclotomic polynomial x^8 - x^4 + 1. The coordinate vector is unique
/// for every field element, so equality and hashing are structural.
class AlgebraicScalar {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kRootOrder = 24;
  using Coeffs = std::array<Rational, kDegree>;

  AlgebraicScalar() = default;
  AlgebraicScalar(Rational r) { coeffs_[0] = r; }  // NOLINT(implicit)
  AlgebraicScalar(std::int64_t n) : AlgebraicScalar(Rational(n)) {}  // NOLINT(implicit)
  explicit AlgebraicScalar(const Coeffs& c) : coeffs_(c) {}

  /// zeta^k for any integer k.
  static AlgebraicScalar zeta_power(int k);

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;
  bool is_rational() const noexcept;

  AlgebraicScalar operator-() const;
  AlgebraicScalar& operator+=(const AlgebraicScalar& o);
  AlgebraicScalar& operator-=(const AlgebraicScalar& o);
  AlgebraicScalar& operator*=(const AlgebraicScalar& o);
  AlgebraicScalar& operator/=(const AlgebraicScalar& o);

  friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
  friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
  friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) { return a *= b; }
  friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) { return a /= b; }
  friend bool operator==(const AlgebraicScalar&, const AlgebraicScalar&) = default;

  /// Galois automorphism zeta -> zeta^k, k a unit mod 24.
  AlgebraicScalar galois(int k) const;
  /// Field norm down to Q (product of all eight conjugates).
  Rational norm() const;
  /// Multiplicative inverse; throws ArithmeticError for zero.
  AlgebraicScalar inverse() const;

  /// Lexicographic order on coordinates. Not a field order; used for canonical sorting.
  friend bool operator<(const AlgebraicScalar& a, const AlgebraicScalar& b) { return a.coeffs_ < b.coeffs_; }

  std::string str() const;

 private:
  Coeffs coeffs_{};
};

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& a);

namespace constants {
AlgebraicScalar zeta();
AlgebraicScalar i();
AlgebraicScalar sqrt2();
AlgebraicScalar sqrt3();
AlgebraicScalar omega();
}  // namespace constants

}  // namespace k3q::algebra

template <>
struct std::hash<k3q::algebra::AlgebraicScalar> {
  std::size_t operator()(const k3q::algebra::AlgebraicScalar& a) const noexcept {
    std::size_t h = 0;
    for (const auto& c : a.coeffs()) h = h * 31u + std::hash<k3q::algebra::Rational>{}(c);
    return h;
  }
};
