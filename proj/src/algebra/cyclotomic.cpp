// SPDX-License-Identifier: Apache-2.0
#include "k3q/algebra/cyclotomic.hpp"

#include <ostream>
#include <sstream>

#include "k3q/error.hpp"

namespace k3q::algebra {
namespace {

constexpr int kN = AlgebraicScalar::kDegree;
constexpr int kUnits[] = {1, 5, 7, 11, 13, 17, 19, 23};

// Reduce a polynomial of degree < 2*kN - 1 modulo x^8 - x^4 + 1, in place.
void reduce(std::array<Rational, 2 * kN - 1>& p) {
  for (int k = 2 * kN - 2; k >= kN; --k) {
    if (p[k].is_zero()) continue;
    // x^k = x^(k-4) - x^(k-8)
    p[k - 4] += p[k];
    p[k - 8] -= p[k];
    p[k] = Rational{};
  }
}

// Integer coordinates of zeta^m for m = 0..23.
const std::array<std::array<int, kN>, 24>& power_table() {
  static const auto table = [] {
    std::array<std::array<int, kN>, 24> t{};
    std::array<int, kN> cur{};
    cur[0] = 1;
    for (int m = 0; m < 24; ++m) {
      t[m] = cur;
      // multiply by x
      const int top = cur[kN - 1];
      for (int j = kN - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      cur[4] += top;
      cur[0] -= top;
    }
    return t;
  }();
  return table;
}

}  // namespace

AlgebraicScalar AlgebraicScalar::zeta_power(int k) {
  const int m = ((k % 24) + 24) % 24;
  Coeffs c{};
  const auto& row = power_table()[m];
  for (int j = 0; j < kN; ++j) c[j] = Rational(row[j]);
  return AlgebraicScalar(c);
}

bool AlgebraicScalar::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool AlgebraicScalar::is_rational() const noexcept {
  for (int j = 1; j < kN; ++j)
    if (!coeffs_[j].is_zero()) return false;
  return true;
}

AlgebraicScalar AlgebraicScalar::operator-() const {
  AlgebraicScalar r;
  for (int j = 0; j < kN; ++j) r.coeffs_[j] = -coeffs_[j];
  return r;
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& o) {
  for (int j = 0; j < kN; ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& o) {
  for (int j = 0; j < kN; ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& o) {
  std::array<Rational, 2 * kN - 1> p{};
  for (int a = 0; a < kN; ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (int b = 0; b < kN; ++b) {
      if (o.coeffs_[b].is_zero()) continue;
      p[a + b] += coeffs_[a] * o.coeffs_[b];
    }
  }
  reduce(p);
  for (int j = 0; j < kN; ++j) coeffs_[j] = p[j];
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator/=(const AlgebraicScalar& o) { return *this *= o.inverse(); }

AlgebraicScalar AlgebraicScalar::galois(int k) const {
  const int u = ((k % 24) + 24) % 24;
  if (u % 2 == 0 || u % 3 == 0) throw DomainError("galois exponent must be a unit mod 24");
  const auto& table = power_table();
  Coeffs out{};
  for (int j = 0; j < kN; ++j) {
    if (coeffs_[j].is_zero()) continue;
    const auto& row = table[(j * u) % 24];
    for (int t = 0; t < kN; ++t)
      if (row[t] != 0) out[t] += coeffs_[j] * Rational(row[t]);
  }
  return AlgebraicScalar(out);
}

Rational AlgebraicScalar::norm() const {
  AlgebraicScalar prod = *this;
  for (int u : kUnits)
    if (u != 1) prod *= galois(u);
  if (!prod.is_rational()) throw ArithmeticError("norm did not land in Q");
  return prod.coeffs_[0];
}

AlgebraicScalar AlgebraicScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_rational()) return AlgebraicScalar(Rational(1) / coeffs_[0]);
  AlgebraicScalar cofactor(Rational(1));
  for (int u : kUnits)
    if (u != 1) cofactor *= galois(u);
  const AlgebraicScalar n = *this * cofactor;
  if (!n.is_rational()) throw ArithmeticError("norm did not land in Q");
  return cofactor * AlgebraicScalar(Rational(1) / n.coeffs_[0]);
}

std::string AlgebraicScalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < kN; ++j) {
    const Rational& c = coeffs_[j];
    if (c.is_zero()) continue;
    if (!first) os << (c.num() < 0 ? " - " : " + ");
    else if (c.num() < 0) os << "-";
    const Rational mag = c.num() < 0 ? -c : c;
    if (j == 0) os << mag;
    else {
      if (mag != Rational(1)) os << mag << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& a) { return os << a.str(); }

namespace constants {
AlgebraicScalar zeta() { return AlgebraicScalar::zeta_power(1); }
AlgebraicScalar i() { return AlgebraicScalar::zeta_power(6); }
// zeta_8 + zeta_8^-1 with zeta_8 = zeta^3.
AlgebraicScalar sqrt2() { return AlgebraicScalar::zeta_power(3) + AlgebraicScalar::zeta_power(21); }
// zeta_12 + zeta_12^-1 with zeta_12 = zeta^2.
AlgebraicScalar sqrt3() { return AlgebraicScalar::zeta_power(2) + AlgebraicScalar::zeta_power(22); }
AlgebraicScalar omega() { return AlgebraicScalar::zeta_power(8); }
}  // namespace constants

}  // namespace k3q::algebra
