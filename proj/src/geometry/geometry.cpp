// SPDX-License-Identifier: Apache-2.0
#include "k3q/geometry/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "k3q/error.hpp"
#include "k3q/groups/registry.hpp"

namespace k3q::geometry {

using algebra::rref;

ProjectivePoint::ProjectivePoint(const Vec4& v) : coords_(algebra::normalize_projective(v)) {}

LineType line_type_for_order(int projective_order) {
  switch (projective_order) {
    case 2: return LineType::M;
    case 3: return LineType::N;
    case 4: return LineType::R;
    default: return LineType::none;
  }
}

std::string to_string(LineType t) {
  switch (t) {
    case LineType::M: return "M";
    case LineType::N: return "N";
    case LineType::R: return "R";
    default: return "-";
  }
}

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int pivot_of(const Vec4& v) {
  for (int k = 0; k < 4; ++k)
    if (!v[k].is_zero()) return k;
  return -1;
}

// v lies in the span of an echelon pair.
bool span_contains(const std::array<Vec4, 2>& basis, const Vec4& v) {
  const int p0 = pivot_of(basis[0]);
  const int p1 = pivot_of(basis[1]);
  for (int k = 0; k < 4; ++k) {
    AlgebraicScalar r = v[k] - v[p0] * basis[0][k] - v[p1] * basis[1][k];
    if (!r.is_zero()) return false;
  }
  return true;
}

}  // namespace

ProjectiveLine::ProjectiveLine(const Vec4& a, const Vec4& b, LineType type) : type_(type) {
  std::vector<std::vector<AlgebraicScalar>> rows = {{a.begin(), a.end()}, {b.begin(), b.end()}};
  if (rref(rows).size() != 2) throw DomainError("line needs two independent vectors");
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) basis_[r][c] = rows[r][c];
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    pluecker_[k] = basis_[0][i] * basis_[1][j] - basis_[0][j] * basis_[1][i];
  }
  for (const auto& p : pluecker_) {
    if (p.is_zero()) continue;
    const AlgebraicScalar inv = p.inverse();
    for (auto& q : pluecker_) q *= inv;
    break;
  }
}

ProjectiveLine ProjectiveLine::with_type(LineType t) const {
  ProjectiveLine out = *this;
  out.type_ = t;
  return out;
}

ProjectiveLine ProjectiveLine::transformed(const Matrix4& m) const {
  return ProjectiveLine(m * basis_[0], m * basis_[1], type_);
}

bool ProjectiveLine::contains(const ProjectivePoint& p) const { return span_contains(basis_, p.coords()); }

AlgebraicScalar bilinear(const Vec4& a, const Vec4& b) {
  AlgebraicScalar s;
  for (int k = 0; k < 4; ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  return s;
}

bool on_quadric(const ProjectivePoint& p) { return bilinear(p.coords(), p.coords()).is_zero(); }

bool in_quadric(const ProjectiveLine& l) {
  const auto& [a, b] = l.basis();
  return bilinear(a, a).is_zero() && bilinear(b, b).is_zero() && bilinear(a, b).is_zero();
}

bool tangent_to_quadric(const ProjectiveLine& l) {
  if (in_quadric(l)) return false;
  const auto& [a, b] = l.basis();
  const AlgebraicScalar ab = bilinear(a, b);
  return (ab * ab - bilinear(a, a) * bilinear(b, b)).is_zero();
}

std::optional<ProjectivePoint> intersection(const ProjectiveLine& a, const ProjectiveLine& b) {
  if (a == b) throw DomainError("intersection of a line with itself");
  // Solve s a0 + t a1 = u b0 + v b1 via the kernel of the 4x4 system.
  std::vector<std::vector<AlgebraicScalar>> rows(4, std::vector<AlgebraicScalar>(4));
  for (int k = 0; k < 4; ++k) {
    rows[k][0] = a.basis()[0][k];
    rows[k][1] = a.basis()[1][k];
    rows[k][2] = -b.basis()[0][k];
    rows[k][3] = -b.basis()[1][k];
  }
  const auto ker = algebra::kernel(std::move(rows));
  if (ker.empty()) return std::nullopt;
  Vec4 p;
  for (int k = 0; k < 4; ++k) p[k] = ker[0][0] * a.basis()[0][k] + ker[0][1] * a.basis()[1][k];
  return ProjectivePoint(p);
}

bool fixes_pointwise(const Matrix4& m, const ProjectiveLine& l) {
  const auto& basis = l.basis();
  const Vec4 u = m * basis[0];
  const int p = pivot_of(basis[0]);
  const AlgebraicScalar c = u[p];  // basis[0][p] == 1
  for (int r = 0; r < 2; ++r) {
    const Vec4 img = r == 0 ? u : m * basis[1];
    for (int k = 0; k < 4; ++k)
      if (img[k] != c * basis[r][k]) return false;
  }
  return true;
}

std::vector<ProjectiveLine> fix_lines(const Matrix4& m) {
  const int order = groups::projective_order(m);
  if (order == 1) throw DomainError("element is projectively trivial");
  std::vector<ProjectiveLine> out;
  for (const auto& es : algebra::eigenspaces(m))
    if (es.basis.size() == 2) out.emplace_back(es.basis[0], es.basis[1], line_type_for_order(order));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

namespace {

Matrix4 left_mult(const Vec4& p) {
  Matrix4 m;
  const AlgebraicScalar rows[4][4] = {{p[0], -p[1], -p[2], -p[3]},
                                      {p[1], p[0], -p[3], p[2]},
                                      {p[2], p[3], p[0], -p[1]},
                                      {p[3], -p[2], p[1], p[0]}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  return m;
}

Matrix4 right_mult(const Vec4& a) {
  Matrix4 m;
  const AlgebraicScalar rows[4][4] = {{a[0], -a[1], -a[2], -a[3]},
                                      {a[1], a[0], a[3], -a[2]},
                                      {a[2], -a[3], a[0], a[1]},
                                      {a[3], a[2], -a[1], a[0]}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  return m;
}

Vec4 first_column(const Matrix4& m) { return {m(0, 0), m(1, 0), m(2, 0), m(3, 0)}; }

using Mat2 = std::array<std::array<AlgebraicScalar, 2>, 2>;

Mat2 to_mat2(const Vec4& x) {
  const AlgebraicScalar i = algebra::constants::i();
  return {{{x[0] + i * x[1], x[2] + i * x[3]}, {-x[2] + i * x[3], x[0] - i * x[1]}}};
}

Vec4 from_mat2(const Mat2& m) {
  const AlgebraicScalar half(algebra::Rational(1, 2));
  const AlgebraicScalar inv2i = (AlgebraicScalar(2) * algebra::constants::i()).inverse();
  return {(m[0][0] + m[1][1]) * half, (m[0][0] - m[1][1]) * inv2i, (m[0][1] - m[1][0]) * half,
          (m[0][1] + m[1][0]) * inv2i};
}

std::array<AlgebraicScalar, 2> normalize2(std::array<AlgebraicScalar, 2> v) {
  if (!v[0].is_zero()) return {AlgebraicScalar(1), v[1] / v[0]};
  if (!v[1].is_zero()) return {AlgebraicScalar(), AlgebraicScalar(1)};
  throw DomainError("zero vector in P^1");
}

// Column space (left) or row space (right) of a rank-one 2x2 matrix.
std::array<AlgebraicScalar, 2> image_space(const Mat2& x, Side side) {
  for (int k = 0; k < 2; ++k) {
    const std::array<AlgebraicScalar, 2> v =
        side == Side::left ? std::array<AlgebraicScalar, 2>{x[0][k], x[1][k]} : std::array<AlgebraicScalar, 2>{x[k][0], x[k][1]};
    if (!v[0].is_zero() || !v[1].is_zero()) return normalize2(v);
  }
  throw DomainError("zero matrix has no image");
}

}  // namespace

bool is_left_element(const Matrix4& m) { return m == left_mult(first_column(m)); }
bool is_right_element(const Matrix4& m) { return m == right_mult(first_column(m)); }

std::optional<Side> ruling_side(const ProjectiveLine& l) {
  if (!in_quadric(l)) return std::nullopt;
  const Mat2 a = to_mat2(l.basis()[0]);
  const Mat2 b = to_mat2(l.basis()[1]);
  if (image_space(a, Side::left) == image_space(b, Side::left)) return Side::left;
  return Side::right;
}

RulingPoint ruling_point(const ProjectiveLine& l) {
  const auto side = ruling_side(l);
  if (!side) throw DomainError("line is not contained in the quadric");
  return {*side, image_space(to_mat2(l.basis()[0]), *side)};
}

ProjectiveLine ruling_line(const RulingPoint& r) {
  const auto& [u0, u1] = r.coord;
  const AlgebraicScalar z;
  Mat2 x, y;
  if (r.side == Side::left) {
    x = {{{u0, z}, {u1, z}}};
    y = {{{z, u0}, {z, u1}}};
  } else {
    x = {{{u0, u1}, {z, z}}};
    y = {{{z, z}, {u0, u1}}};
  }
  return ProjectiveLine(from_mat2(x), from_mat2(y));
}

RulingPoint ruling_action(const Matrix4& g, const RulingPoint& r) { return ruling_point(ruling_line(r).transformed(g)); }

namespace {

template <class T>
std::vector<T> orbit_of(const ProjectiveGroup& pg, const T& start) {
  std::unordered_set<T> seen{start};
  std::vector<T> orbit{start};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const Matrix4& s : pg.source().generators()) {
      T img = orbit[k].transformed(s);
      if (seen.insert(img).second) orbit.push_back(std::move(img));
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

std::vector<ProjectiveLine> line_orbit(const ProjectiveGroup& pg, const ProjectiveLine& l) { return orbit_of(pg, l); }

std::vector<ProjectivePoint> point_orbit(const ProjectiveGroup& pg, const ProjectivePoint& p) { return orbit_of(pg, p); }

std::vector<std::vector<ProjectiveLine>> line_orbits(const ProjectiveGroup& pg, const std::vector<ProjectiveLine>& lines) {
  std::unordered_set<ProjectiveLine> covered;
  std::vector<std::vector<ProjectiveLine>> out;
  for (const auto& l : lines) {
    if (covered.count(l)) continue;
    auto orb = line_orbit(pg, l);
    covered.insert(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<std::size_t> stabilizer(const ProjectiveGroup& pg, const ProjectiveLine& l) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < pg.order(); ++k) {
    const Matrix4& m = pg.elements()[k];
    if (span_contains(l.basis(), m * l.basis()[0]) && span_contains(l.basis(), m * l.basis()[1])) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> fix_group(const ProjectiveGroup& pg, const ProjectiveLine& l) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < pg.order(); ++k)
    if (fixes_pointwise(pg.elements()[k], l)) out.push_back(k);
  return out;
}

std::vector<std::size_t> point_stabilizer(const ProjectiveGroup& pg, const ProjectivePoint& p) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < pg.order(); ++k)
    if (p.transformed(pg.elements()[k]) == p) out.push_back(k);
  return out;
}

std::vector<ProjectiveLine> all_fix_lines(const ProjectiveGroup& pg) {
  std::set<ProjectiveLine> lines;
  for (const Matrix4& m : pg.elements()) {
    if (groups::projective_order(m) == 1) continue;
    for (auto& l : fix_lines(m)) lines.insert(l.with_type(LineType::none));
  }
  return {lines.begin(), lines.end()};
}

std::vector<RulingOrbit> orbits_on_ruling(const ProjectiveGroup& pg, Side side) {
  std::vector<ProjectiveLine> candidates;
  for (const auto& l : all_fix_lines(pg))
    if (ruling_side(l) == side) candidates.push_back(l);
  std::vector<RulingOrbit> out;
  for (const auto& orb : line_orbits(pg, candidates))
    out.push_back({orb.size(), fix_group(pg, orb.front()).size(), orb.front()});
  std::sort(out.begin(), out.end(), [](const RulingOrbit& a, const RulingOrbit& b) {
    return std::tie(a.fixer_order, b.length, a.representative) < std::tie(b.fixer_order, a.length, b.representative);
  });
  return out;
}

const std::vector<ProjectiveLine>& base_locus(int degree, Side side) {
  if (degree != 6 && degree != 8) throw DomainError("base locus defined for degree 6 or 8");
  static std::once_flag once[2];
  static std::vector<ProjectiveLine> cache[2][2];
  const int d = degree == 6 ? 0 : 1;
  std::call_once(once[d], [&] {
    const auto& pg = groups::registry_projective(degree == 6 ? "TxT" : "OxO");
    for (Side s : {Side::left, Side::right}) {
      std::vector<ProjectiveLine> found;
      int matches = 0;
      for (const auto& orb : orbits_on_ruling(pg, s))
        if (orb.length == static_cast<std::size_t>(degree)) {
          ++matches;
          found = line_orbit(pg, orb.representative);
        }
      if (matches != 1) throw DomainError("base locus orbit is not unique");
      cache[d][s == Side::left ? 0 : 1] = std::move(found);
    }
  });
  return cache[d][side == Side::left ? 0 : 1];
}

std::vector<ProjectiveLine> base_locus(int degree) {
  std::vector<ProjectiveLine> out = base_locus(degree, Side::left);
  const auto& right = base_locus(degree, Side::right);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

std::vector<std::size_t> meeting_point_orbits(const ProjectiveGroup& pg, const std::vector<ProjectiveLine>& left,
                                              const std::vector<ProjectiveLine>& right) {
  std::set<ProjectivePoint> points;
  for (const auto& a : left)
    for (const auto& b : right)
      if (auto p = intersection(a, b)) points.insert(*p);
  std::unordered_set<ProjectivePoint> covered;
  std::vector<std::size_t> lengths;
  for (const auto& p : points) {
    if (covered.count(p)) continue;
    const auto orb = point_orbit(pg, p);
    covered.insert(orb.begin(), orb.end());
    lengths.push_back(orb.size());
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int points_off_quadric(const ProjectiveLine& l, int degree) {
  if (in_quadric(l)) throw DomainError("line lies in the quadric");
  std::set<ProjectivePoint> hits;
  for (const auto& b : base_locus(degree))
    if (auto p = intersection(l, b)) hits.insert(*p);
  const int mult = tangent_to_quadric(l) ? 2 : 1;
  return degree - static_cast<int>(hits.size()) * mult;
}

}  // namespace k3q::geometry
