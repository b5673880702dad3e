// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "k3q/algebra/matrix.hpp"
#include "k3q/groups/group.hpp"

namespace k3q::geometry {

using algebra::AlgebraicScalar;
using algebra::Matrix4;
using algebra::Vec4;
using groups::ProjectiveGroup;

/// Point of P^3 with first nonzero coordinate equal to 1.
class ProjectivePoint {
 public:
  /// Throws DomainError on the zero vector.
  explicit ProjectivePoint(const Vec4& v);
  const Vec4& coords() const noexcept { return coords_; }
  ProjectivePoint transformed(const Matrix4& m) const { return ProjectivePoint(m * coords_); }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ < b.coords_; }

 private:
  Vec4 coords_;
};

/// Line type by the projective order of an element fixing it pointwise: 2 -> M, 3 -> N, 4 -> R.
enum class LineType { none, M, N, R };
LineType line_type_for_order(int projective_order);
std::string to_string(LineType t);

/// Line of P^3 as the span of two vectors, keyed by normalized Pluecker coordinates
/// (p01, p02, p03, p12, p13, p23).
class ProjectiveLine {
 public:
  /// Throws DomainError if a and b are dependent.
  ProjectiveLine(const Vec4& a, const Vec4& b, LineType type = LineType::none);

  /// Reduced echelon basis.
  const std::array<Vec4, 2>& basis() const noexcept { return basis_; }
  const std::array<AlgebraicScalar, 6>& pluecker() const noexcept { return pluecker_; }
  LineType type() const noexcept { return type_; }
  ProjectiveLine with_type(LineType t) const;

  ProjectiveLine transformed(const Matrix4& m) const;
  bool contains(const ProjectivePoint& p) const;

  /// Equality ignores the type tag.
  friend bool operator==(const ProjectiveLine& a, const ProjectiveLine& b) { return a.pluecker_ == b.pluecker_; }
  friend bool operator<(const ProjectiveLine& a, const ProjectiveLine& b) { return a.pluecker_ < b.pluecker_; }

 private:
  std::array<Vec4, 2> basis_;
  std::array<AlgebraicScalar, 6> pluecker_;
  LineType type_;
};

/// The invariant quadric x0^2 + x1^2 + x2^2 + x3^2 as a symmetric bilinear form.
AlgebraicScalar bilinear(const Vec4& a, const Vec4& b);
bool on_quadric(const ProjectivePoint& p);
bool in_quadric(const ProjectiveLine& l);
/// A line not in the quadric is tangent when it meets it in a single point.
bool tangent_to_quadric(const ProjectiveLine& l);

/// Intersection point, or nullopt for skew lines. Throws DomainError if the lines coincide.
std::optional<ProjectivePoint> intersection(const ProjectiveLine& a, const ProjectiveLine& b);

/// m acts as a scalar on the 2-dimensional subspace of l.
bool fixes_pointwise(const Matrix4& m, const ProjectiveLine& l);

/// Two-dimensional eigenspaces of m as lines tagged by projective order.
/// Throws DomainError if m is a scalar matrix.
std::vector<ProjectiveLine> fix_lines(const Matrix4& m);

// ---- the two rulings -------------------------------------------------------

enum class Side { left, right };
std::string to_string(Side s);

/// m = (p, 1) for some p (left multiplication).
bool is_left_element(const Matrix4& m);
/// m = (1, p) for some p (right multiplication).
bool is_right_element(const Matrix4& m);

/// A line of one ruling, identified by a point of P^1.
///
/// With x mapped to X = [[x0 + i x1, x2 + i x3], [-x2 + i x3, x0 - i x1]]
/// (so det X is the quadric), a left ruling line is the set of rank-one X with
/// a fixed column space and a right ruling line the set with a fixed row space.
/// Left multiplications move the column space, right ones the row space.
struct RulingPoint {
  Side side;
  std::array<AlgebraicScalar, 2> coord;  ///< first nonzero entry 1
  friend bool operator==(const RulingPoint&, const RulingPoint&) = default;
  friend bool operator<(const RulingPoint& a, const RulingPoint& b) {
    return std::tie(a.side, a.coord) < std::tie(b.side, b.coord);
  }
};

/// Ruling of a line inside the quadric, nullopt otherwise.
std::optional<Side> ruling_side(const ProjectiveLine& l);
/// Throws DomainError if l is not contained in the quadric.
RulingPoint ruling_point(const ProjectiveLine& l);
ProjectiveLine ruling_line(const RulingPoint& r);
/// Induced Moebius action of g on P^1.
RulingPoint ruling_action(const Matrix4& g, const RulingPoint& r);

struct RulingOrbit {
  std::size_t length;
  std::size_t fixer_order;  ///< |F_L| of any line in the orbit
  ProjectiveLine representative;
};

/// PH-orbits of the ruling lines on one side having a nontrivial pointwise
/// fixer, sorted by fixer order, then descending length, then representative.
std::vector<RulingOrbit> orbits_on_ruling(const ProjectiveGroup& pg, Side side);

/// The n lines of one ruling in the base locus of the degree-n pencil: the
/// unique orbit of length n of PT x T (n = 6) or PO x O (n = 8) on that ruling.
/// Sorted. Throws DomainError for other degrees.
const std::vector<ProjectiveLine>& base_locus(int degree, Side side);
/// All 2n base lines, left ruling first.
std::vector<ProjectiveLine> base_locus(int degree);

// ---- orbits and stabilizers ------------------------------------------------

/// Full PH-orbits meeting the given lines; each orbit sorted, orbits sorted by first line.
std::vector<std::vector<ProjectiveLine>> line_orbits(const ProjectiveGroup& pg,
                                                      const std::vector<ProjectiveLine>& lines);
/// Orbit of one line, sorted.
std::vector<ProjectiveLine> line_orbit(const ProjectiveGroup& pg, const ProjectiveLine& l);
/// H_L: indices into pg.elements() of the elements with hL = L.
std::vector<std::size_t> stabilizer(const ProjectiveGroup& pg, const ProjectiveLine& l);
/// F_L: indices of the elements fixing L pointwise (identity included).
std::vector<std::size_t> fix_group(const ProjectiveGroup& pg, const ProjectiveLine& l);

std::vector<ProjectivePoint> point_orbit(const ProjectiveGroup& pg, const ProjectivePoint& p);
std::vector<std::size_t> point_stabilizer(const ProjectiveGroup& pg, const ProjectivePoint& p);

/// Orbit lengths (ascending) of the intersection points of the left lines with
/// the right lines under pg.
std::vector<std::size_t> meeting_point_orbits(const ProjectiveGroup& pg, const std::vector<ProjectiveLine>& left,
                                              const std::vector<ProjectiveLine>& right);

/// Points of the degree-n pencil member on l away from the quadric: n minus the
/// intersections of l with the base locus, counted twice when l is tangent.
/// Throws DomainError if l lies in the quadric.
int points_off_quadric(const ProjectiveLine& l, int degree);

/// Every distinct fix-line of the non-trivial elements of pg, sorted.
std::vector<ProjectiveLine> all_fix_lines(const ProjectiveGroup& pg);

}  // namespace k3q::geometry

template <>
struct std::hash<k3q::geometry::ProjectiveLine> {
  std::size_t operator()(const k3q::geometry::ProjectiveLine& l) const noexcept {
    std::size_t h = 0;
    for (const auto& c : l.pluecker()) h = h * 1000003u ^ std::hash<k3q::algebra::AlgebraicScalar>{}(c);
    return h;
  }
};

template <>
struct std::hash<k3q::geometry::ProjectivePoint> {
  std::size_t operator()(const k3q::geometry::ProjectivePoint& p) const noexcept {
    std::size_t h = 0;
    for (const auto& c : p.coords()) h = h * 1000003u ^ std::hash<k3q::algebra::AlgebraicScalar>{}(c);
    return h;
  }
};
