// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <vector>

#include "doctest.h"
#include "k3q/algebra/cyclotomic.hpp"
#include "k3q/algebra/matrix.hpp"
#include "k3q/error.hpp"
#include "k3q/groups/generators.hpp"

using namespace k3q::algebra;
using k3q::groups::left_factor;
using k3q::groups::Quaternion;
using k3q::groups::right_factor;

namespace {

// Oracle: schoolbook polynomial product followed by long division by
// x^8 - x^4 + 1, independent of the in-place reduction used by the field.
std::vector<Rational> poly_mul_mod(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> p(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  const std::vector<Rational> modulus = {1, 0, 0, 0, -1, 0, 0, 0, 1};
  for (int d = static_cast<int>(p.size()) - 1; d >= 8; --d) {
    const Rational lead = p[d];
    if (lead.is_zero()) continue;
    for (int k = 0; k <= 8; ++k) p[d - 8 + k] -= lead * modulus[k];
  }
  p.resize(8);
  return p;
}

std::vector<Rational> coeffs_of(const AlgebraicScalar& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

AlgebraicScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  AlgebraicScalar::Coeffs c;
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return AlgebraicScalar(c);
}

// Polynomials in x with field coefficients, for the Leibniz determinant oracle.
using Poly = std::vector<AlgebraicScalar>;

Poly pmul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// det(M - x I) by summing over all 24 permutations.
Poly char_poly_leibniz(const Matrix4& m) {
  std::vector<int> perm = {0, 1, 2, 3};
  Poly total(5);
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term = {AlgebraicScalar(inversions % 2 ? -1 : 1)};
    for (int r = 0; r < 4; ++r) {
      Poly entry = {m(r, perm[r])};
      if (perm[r] == r) entry.push_back(AlgebraicScalar(-1));
      term = pmul(term, entry);
    }
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("defining relations of the named constants") {
  using namespace constants;
  CHECK(sqrt2() * sqrt2() == AlgebraicScalar(2));
  CHECK(i() * i() == AlgebraicScalar(-1));
  CHECK(sqrt3() * sqrt3() == AlgebraicScalar(3));
  CHECK(omega() * omega() + omega() + AlgebraicScalar(1) == AlgebraicScalar());
  CHECK(AlgebraicScalar::zeta_power(24) == AlgebraicScalar(1));
  CHECK(AlgebraicScalar::zeta_power(12) == AlgebraicScalar(-1));
}

TEST_CASE("inverse of sqrt2 agrees with brute-force polynomial reduction") {
  const AlgebraicScalar s = constants::sqrt2();
  const AlgebraicScalar inv = AlgebraicScalar(1) / s;
  CHECK(coeffs_of(inv * s) == coeffs_of(AlgebraicScalar(1)));
  CHECK(poly_mul_mod(coeffs_of(inv), coeffs_of(s)) == coeffs_of(AlgebraicScalar(1)));
  // 1/sqrt2 = sqrt2/2
  CHECK(inv == s * AlgebraicScalar(Rational(1, 2)));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(AlgebraicScalar(1) / AlgebraicScalar(), k3q::ArithmeticError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), k3q::ArithmeticError);
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(coeffs_of(a * b) == poly_mul_mod(coeffs_of(a), coeffs_of(b)));
    if (!a.is_zero()) CHECK(a * a.inverse() == AlgebraicScalar(1));
  }
}

TEST_CASE("generator matrices are in SO(4)") {
  for (auto q : {Quaternion::q1, Quaternion::q2, Quaternion::q3, Quaternion::p3, Quaternion::p4})
    for (const Matrix4& m : {left_factor(q), right_factor(q)}) {
      CHECK(m.transpose() * m == Matrix4::identity());
      CHECK(m.det() == AlgebraicScalar(1));
    }
}

TEST_CASE("matrix products and inverses") {
  const Matrix4 q2 = left_factor(Quaternion::q2);
  CHECK(q2 * q2 == -Matrix4::identity());
  const Matrix4 p3 = left_factor(Quaternion::p3);
  CHECK(Matrix4::identity() * p3 == p3);
  CHECK(left_factor(Quaternion::p4).pow(8) == Matrix4::identity());
  CHECK(left_factor(Quaternion::p4).pow(4) == -Matrix4::identity());
  CHECK(p3 * p3.inverse() == Matrix4::identity());
  Matrix4 singular{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}};
  CHECK_THROWS_AS(singular.inverse(), k3q::ArithmeticError);
}

TEST_CASE("characteristic polynomials match the Leibniz expansion") {
  // det(M - xI) for 4x4 equals det(xI - M).
  const Matrix4 q1 = left_factor(Quaternion::q1);
  const Matrix4 p3 = left_factor(Quaternion::p3);
  for (const Matrix4& m : {q1, p3, right_factor(Quaternion::p4), left_factor(Quaternion::p4) * right_factor(Quaternion::p3)}) {
    const auto fl = characteristic_polynomial(m);
    const auto oracle = char_poly_leibniz(m);
    for (int k = 0; k <= 4; ++k) CHECK(fl[k] == oracle[k]);
  }
  // Frozen from the oracle: (x^2 + 1)^2 and (x^2 - x + 1)^2.
  const auto a = char_poly_leibniz(q1);
  CHECK(a == Poly{1, 0, 2, 0, 1});
  const auto b = char_poly_leibniz(p3);
  CHECK(b == Poly{1, -2, 3, -2, 1});
}

TEST_CASE("eigenspaces") {
  SUBCASE("identity") {
    const auto es = eigenspaces(Matrix4::identity());
    REQUIRE(es.size() == 1);
    CHECK(es[0].eigenvalue == AlgebraicScalar(1));
    CHECK(es[0].basis.size() == 4);
  }
  SUBCASE("(q1,1) has eigenvalues +-i with two-dimensional eigenspaces") {
    const Matrix4 m = left_factor(Quaternion::q1);
    const auto es = eigenspaces(m);
    REQUIRE(es.size() == 2);
    CHECK(es[0].eigenvalue == constants::i());
    CHECK(es[1].eigenvalue == -constants::i());
    for (const auto& e : es) {
      CHECK(e.basis.size() == 2);
      for (const auto& v : e.basis) {
        Vec4 scaled;
        for (int k = 0; k < 4; ++k) scaled[k] = v[k] * e.eigenvalue;
        CHECK(m * v == scaled);
      }
    }
  }
  SUBCASE("(p3,1) has a pair of primitive sixth roots") {
    const auto es = eigenspaces(left_factor(Quaternion::p3));
    REQUIRE(es.size() == 2);
    CHECK(es[0].root_index == 4);
    CHECK(es[1].root_index == 20);
    CHECK(es[0].basis.size() == 2);
  }
  SUBCASE("non-finite-order matrix") {
    Matrix4 m = Matrix4::scalar(AlgebraicScalar(2));
    CHECK_THROWS_WITH_AS(eigenspaces(m), "eigenvalue outside mu_24", k3q::DomainError);
  }
}

TEST_CASE("element words") {
  using k3q::groups::parse_element;
  CHECK(parse_element("(q1,1)") == left_factor(Quaternion::q1));
  CHECK(parse_element("(1,q1)") == right_factor(Quaternion::q1));
  CHECK(parse_element("(p3^2, p3)") == left_factor(Quaternion::p3).pow(2) * right_factor(Quaternion::p3));
  CHECK(parse_element("(p4q2,q2)") == left_factor(Quaternion::p4) * left_factor(Quaternion::q2) * right_factor(Quaternion::q2));
  // (1,p)(1,q) = (1,pq)
  CHECK(parse_element("(1,p4q2)") == right_factor(Quaternion::p4) * right_factor(Quaternion::q2));
  CHECK_THROWS_AS(parse_element("(x1,1)"), k3q::ParseError);
  CHECK_THROWS_AS(parse_element("q1,1"), k3q::ParseError);
}

TEST_CASE("conjugation by C swaps the factors") {
  const Matrix4 c = k3q::groups::swap_matrix();
  for (auto q : {Quaternion::q1, Quaternion::q2, Quaternion::p3, Quaternion::p4})
    CHECK(c.inverse() * left_factor(q) * c == right_factor(q));
}
