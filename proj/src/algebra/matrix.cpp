// SPDX-License-Identifier: Apache-2.0
#include "k3q/algebra/matrix.hpp"

#include <ostream>
#include <utility>

#include "k3q/error.hpp"

namespace k3q::algebra {

Matrix4::Matrix4(std::initializer_list<std::initializer_list<std::int64_t>> rows, const AlgebraicScalar& scale) {
  if (rows.size() != 4) throw DomainError("Matrix4 needs 4 rows");
  int r = 0;
  for (const auto& row : rows) {
    if (row.size() != 4) throw DomainError("Matrix4 needs 4 columns");
    int c = 0;
    for (std::int64_t v : row) a_[r * 4 + c++] = AlgebraicScalar(v) * scale;
    ++r;
  }
}

Matrix4 Matrix4::identity() { return scalar(AlgebraicScalar(1)); }

Matrix4 Matrix4::scalar(const AlgebraicScalar& s) {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = s;
  return m;
}

Matrix4 Matrix4::operator*(const Matrix4& o) const {
  Matrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) {
      const AlgebraicScalar& lhs = (*this)(r, k);
      if (lhs.is_zero()) continue;
      for (int c = 0; c < 4; ++c) {
        const AlgebraicScalar& rhs = o(k, c);
        if (!rhs.is_zero()) out(r, c) += lhs * rhs;
      }
    }
  return out;
}

Vec4 Matrix4::operator*(const Vec4& v) const {
  Vec4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix4 Matrix4::operator-() const {
  Matrix4 out;
  for (int i = 0; i < 16; ++i) out.a_[i] = -a_[i];
  return out;
}

Matrix4 Matrix4::operator+(const Matrix4& o) const {
  Matrix4 out;
  for (int i = 0; i < 16; ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Matrix4 Matrix4::operator-(const Matrix4& o) const {
  Matrix4 out;
  for (int i = 0; i < 16; ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Matrix4 Matrix4::transpose() const {
  Matrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(c, r) = (*this)(r, c);
  return out;
}

AlgebraicScalar Matrix4::trace() const { return a_[0] + a_[5] + a_[10] + a_[15]; }

AlgebraicScalar Matrix4::det() const {
  std::vector<std::vector<AlgebraicScalar>> m(4, std::vector<AlgebraicScalar>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = (*this)(r, c);
  AlgebraicScalar det(1);
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return AlgebraicScalar();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const AlgebraicScalar inv = m[col][col].inverse();
    for (int r = col + 1; r < 4; ++r) {
      if (m[r][col].is_zero()) continue;
      const AlgebraicScalar f = m[r][col] * inv;
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Matrix4 Matrix4::inverse() const {
  std::vector<std::vector<AlgebraicScalar>> aug(4, std::vector<AlgebraicScalar>(8));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) aug[r][c] = (*this)(r, c);
    aug[r][4 + r] = AlgebraicScalar(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < 4 || pivots[3] != 3) throw ArithmeticError("singular matrix");
  Matrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = aug[r][4 + c];
  return out;
}

Matrix4 Matrix4::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Matrix4 result = identity();
  Matrix4 base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Matrix4& m) {
  for (int r = 0; r < 4; ++r) {
    os << "[";
    for (int c = 0; c < 4; ++c) os << (c ? ", " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

std::vector<int> rref(std::vector<std::vector<AlgebraicScalar>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[lead]);
    const AlgebraicScalar inv = rows[lead][col].inverse();
    for (std::size_t c = col; c < ncols; ++c) rows[lead][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      const AlgebraicScalar f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        if (!rows[lead][c].is_zero()) rows[r][c] -= f * rows[lead][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

std::vector<std::vector<AlgebraicScalar>> kernel(std::vector<std::vector<AlgebraicScalar>> rows) {
  if (rows.empty()) return {};
  const std::size_t ncols = rows[0].size();
  const auto pivots = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<AlgebraicScalar>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<AlgebraicScalar> v(ncols);
    v[free] = AlgebraicScalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

int rank(std::vector<std::vector<AlgebraicScalar>> rows) { return static_cast<int>(rref(rows).size()); }

Vec4 normalize_projective(const Vec4& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (x == AlgebraicScalar(1)) return v;
    const AlgebraicScalar inv = x.inverse();
    Vec4 out;
    for (int i = 0; i < 4; ++i) out[i] = v[i] * inv;
    return out;
  }
  throw DomainError("zero vector has no projective point");
}

std::array<AlgebraicScalar, 5> characteristic_polynomial(const Matrix4& m) {
  // Faddeev-LeVerrier: M_k = m M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(m M_k)/k.
  std::array<AlgebraicScalar, 5> c{};
  c[4] = AlgebraicScalar(1);
  Matrix4 mk;  // M_0 = 0
  for (int k = 1; k <= 4; ++k) {
    mk = m * mk + Matrix4::scalar(c[4 - k + 1]);
    const AlgebraicScalar t = (m * mk).trace();
    c[4 - k] = -t * AlgebraicScalar(Rational(1, k));
  }
  return c;
}

std::vector<Eigenspace> eigenspaces(const Matrix4& m) {
  const auto cp = characteristic_polynomial(m);
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (int k = 0; k < AlgebraicScalar::kRootOrder; ++k) {
    const AlgebraicScalar lambda = AlgebraicScalar::zeta_power(k);
    AlgebraicScalar value = cp[4];
    for (int d = 3; d >= 0; --d) value = value * lambda + cp[d];
    if (!value.is_zero()) continue;
    std::vector<std::vector<AlgebraicScalar>> rows(4, std::vector<AlgebraicScalar>(4));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) rows[r][c] = m(r, c) - (r == c ? lambda : AlgebraicScalar());
    auto ker = kernel(std::move(rows));
    Eigenspace es{k, lambda, {}};
    for (auto& v : ker) es.basis.push_back(Vec4{v[0], v[1], v[2], v[3]});
    total += es.basis.size();
    out.push_back(std::move(es));
  }
  if (total != 4) throw DomainError("eigenvalue outside mu_24");
  return out;
}

}  // namespace k3q::algebra
