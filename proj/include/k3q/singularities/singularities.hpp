// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3q/geometry/geometry.hpp"

namespace k3q::singularities {

/// Dynkin type A_n (n >= 1), D_n (n >= 4) or E_n (n = 6, 7, 8).
class ADEType {
 public:
  /// Throws DomainError for an invalid kind/index pair.
  ADEType(char kind, int index);
  /// Parses "A_3", "A3", "E_7".
  static ADEType parse(std::string_view text);

  char kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }
  int rank() const noexcept { return index_; }
  std::string str() const;  ///< "A_3"

  friend bool operator==(const ADEType&, const ADEType&) = default;
  friend auto operator<=>(const ADEType&, const ADEType&) = default;

 private:
  char kind_;
  int index_;
};

/// Finite subgroup of SO(3) up to conjugacy.
struct BinaryGroupClass {
  enum class Kind { trivial, cyclic, dihedral, tetrahedral, octahedral, icosahedral };
  Kind kind;
  int n = 1;  ///< order for cyclic, half order for dihedral (D_2 = Z2 x Z2)

  /// Accepts "id", "Z3", "Z_3", "Z2xZ2", "D3", "D_3", "T", "O", "I".
  static BinaryGroupClass parse(std::string_view text);
  std::string str() const;  ///< "id", "Z3", "Z2xZ2", "D3", "T", "O", "I"
  int order() const;        ///< order in SO(3)
  friend bool operator==(const BinaryGroupClass&, const BinaryGroupClass&) = default;
};

/// Type of C^2 / F~ for the binary lift F~ of F; a node with trivial fix-group stays A_1.
ADEType binary_quotient_type(const BinaryGroupClass& f);

/// Multiset of singularities, e.g. 2A_3 + A_1.
struct SingularityReport {
  std::vector<std::pair<int, ADEType>> entries;  ///< (multiplicity, type), merged and sorted

  void add(int multiplicity, const ADEType& t);
  int total_rank() const;
  bool empty() const noexcept { return entries.empty(); }
  std::string str() const;  ///< "2A_3+A_1", "-" when empty
  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

/// A point of the quadric on a base line and on another ruling fix-line: the
/// quotient has A_{t-1} where t is the order of the fixer of the non-base line.
ADEType quadric_point_singularity(int transversal_order, int along_order);

/// Each orbit of fixed points on a line with fix-group of order o gives A_{o-1}.
SingularityReport off_quadric_singularities(int line_order, int orbit_count);

// ---- analyses of the registered groups ------------------------------------

/// Orbits of points where a non-base ruling fix-line meets a base line.
/// Fix(P) is reported as left factor x right factor.
struct QuadricPointClass {
  int left_order;
  int right_order;
  geometry::Side transversal_side;  ///< ruling of the non-base line
  std::size_t length;
  int number;
  ADEType type;
  int transversal_order() const { return transversal_side == geometry::Side::left ? left_order : right_order; }
};
std::vector<QuadricPointClass> quadric_point_classes(std::string_view group, int degree);

/// Named conjugacy-class representative whose off-quadric fix-lines form one orbit.
struct LineClass {
  std::string name;
  std::string element;
};
/// The classes of the registered group, in table order. Throws for OxO.
const std::vector<LineClass>& line_classes(std::string_view group);

struct OffQuadricLineOrbit {
  std::string class_name;  ///< from line_classes, empty if unnamed
  geometry::ProjectiveLine representative;
  std::size_t orbit_length;
  std::size_t fixer_order;
  std::size_t ratio;  ///< |H_L| / |F_L|
  int points;         ///< points_off_quadric
  int number() const { return points / static_cast<int>(ratio); }
};
/// One entry per PH-orbit of off-quadric fix-lines, in line_classes order.
std::vector<OffQuadricLineOrbit> off_quadric_line_orbits(std::string_view group, int degree);

/// Number of PH-orbits of base lines.
int base_line_orbit_count(std::string_view group, int degree);

// ---- singular fibers -------------------------------------------------------

/// k lines through every node, spread evenly over the listed classes.
struct LineIncidence {
  std::vector<std::string> classes;
  int k;
  friend bool operator==(const LineIncidence&, const LineIncidence&) = default;
};

struct NodeOrbitRecord {
  std::string group;
  int fiber;  ///< 1..4
  int node_count;
  int orbit_count;
  BinaryGroupClass fix_group;
  std::vector<LineIncidence> meeting;
  friend bool operator==(const NodeOrbitRecord&, const NodeOrbitRecord&) = default;
};

/// "M1|M2|M3:3,N:4" or "-".
std::vector<LineIncidence> parse_meeting(std::string_view text);
std::string format_meeting(const std::vector<LineIncidence>& m);

/// The node data of the four singular fibers of every registered subgroup.
const std::vector<NodeOrbitRecord>& builtin_node_data();

/// Singularities coming from nodes of the given fiber.
SingularityReport node_singularities(const NodeOrbitRecord& r);

struct NuTotals {
  int nu1, nu2, nu3, nu4;
  int nu() const { return nu1 + nu2 + nu3 + nu4; }
  friend bool operator==(const NuTotals&, const NuTotals&) = default;
};

/// Counts of rational curves on the resolved quotient. fiber 0 is the smooth
/// member; 1..4 need a record in node_data (DomainError otherwise).
NuTotals nu_totals(std::string_view group, int degree, int fiber,
                   const std::vector<NodeOrbitRecord>& node_data = builtin_node_data());

/// Off-quadric singularities on the given fiber: nodes on a line of a class
/// use two of its points each, the remaining points keep their A_{o-1}.
SingularityReport off_quadric_report(std::string_view group, int degree, int fiber,
                                     const std::vector<NodeOrbitRecord>& node_data = builtin_node_data());

}  // namespace k3q::singularities
