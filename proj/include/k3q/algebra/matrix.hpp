// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "k3q/algebra/cyclotomic.hpp"

namespace k3q::algebra {

using Vec4 = std::array<AlgebraicScalar, 4>;

/// 4x4 matrix over Q(zeta_24), row-major.
class Matrix4 {
 public:
  Matrix4() = default;
  /// Rows given as rationals, optionally scaled by a common factor.
  Matrix4(std::initializer_list<std::initializer_list<std::int64_t>> rows,
          const AlgebraicScalar& scale = AlgebraicScalar(1));

  static Matrix4 identity();
  static Matrix4 scalar(const AlgebraicScalar& s);

  const AlgebraicScalar& operator()(int r, int c) const { return a_[r * 4 + c]; }
  AlgebraicScalar& operator()(int r, int c) { return a_[r * 4 + c]; }
  const std::array<AlgebraicScalar, 16>& entries() const noexcept { return a_; }

  Matrix4 operator*(const Matrix4& o) const;
  Vec4 operator*(const Vec4& v) const;
  Matrix4 operator-() const;
  Matrix4 operator+(const Matrix4& o) const;
  Matrix4 operator-(const Matrix4& o) const;
  friend bool operator==(const Matrix4&, const Matrix4&) = default;
  /// Lexicographic on entries; used to pick canonical representatives.
  friend bool operator<(const Matrix4& a, const Matrix4& b) { return a.a_ < b.a_; }

  Matrix4 transpose() const;
  AlgebraicScalar trace() const;
  AlgebraicScalar det() const;
  /// Throws ArithmeticError when singular.
  Matrix4 inverse() const;
  Matrix4 pow(int k) const;

  bool is_identity() const { return *this == identity(); }

 private:
  std::array<AlgebraicScalar, 16> a_{};
};

std::ostream& operator<<(std::ostream& os, const Matrix4& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<AlgebraicScalar>>& rows);

/// Basis of the kernel of a matrix given by rows, in reduced echelon form
/// (each basis vector has its leading coordinate equal to 1).
std::vector<std::vector<AlgebraicScalar>> kernel(std::vector<std::vector<AlgebraicScalar>> rows);

/// Rank of a set of row vectors.
int rank(std::vector<std::vector<AlgebraicScalar>> rows);

/// Scale so the first nonzero coordinate is 1. Throws DomainError on the zero vector.
Vec4 normalize_projective(const Vec4& v);

/// Characteristic polynomial det(x I - m) as coefficients c0..c4 (c4 = 1).
std::array<AlgebraicScalar, 5> characteristic_polynomial(const Matrix4& m);

struct Eigenspace {
  int root_index;  ///< eigenvalue is zeta^root_index
  AlgebraicScalar eigenvalue;
  std::vector<Vec4> basis;  ///< rows of the reduced echelon basis
};

/// All eigenspaces of a matrix of finite order dividing 24.
///
/// Eigenvalues are found by testing the 24 roots of unity; throws DomainError
/// with "eigenvalue outside mu_24" when the multiplicities do not add up to 4.
std::vector<Eigenspace> eigenspaces(const Matrix4& m);

}  // namespace k3q::algebra

template <>
struct std::hash<k3q::algebra::Matrix4> {
  std::size_t operator()(const k3q::algebra::Matrix4& m) const noexcept {
    std::size_t h = 0;
    for (const auto& e : m.entries()) h = h * 1000003u ^ std::hash<k3q::algebra::AlgebraicScalar>{}(e);
    return h;
  }
};
