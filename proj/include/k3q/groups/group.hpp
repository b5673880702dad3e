// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "k3q/algebra/matrix.hpp"

namespace k3q::groups {

using algebra::Matrix4;

/// Finite subgroup of GL(4) over Q(zeta_24), stored as an explicit element list.
///
/// Elements are kept in breadth-first discovery order with the identity first,
/// so element indices are deterministic for a given generator list.
class FiniteMatrixGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// Closure of the generators under multiplication. Throws DomainError
  /// "group too large or not finite" when more than `cap` elements appear.
  static FiniteMatrixGroup generate(std::string name, std::vector<Matrix4> generators,
                                    std::size_t cap = kDefaultCap);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Matrix4>& generators() const noexcept { return generators_; }
  const std::vector<Matrix4>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool contains(const Matrix4& m) const { return index_.count(m) != 0; }
  /// Position of m in elements(); throws DomainError if absent.
  std::size_t index_of(const Matrix4& m) const;

 private:
  std::string name_;
  std::vector<Matrix4> generators_;
  std::vector<Matrix4> elements_;
  std::unordered_map<Matrix4, std::size_t> index_;
};

/// Smallest k >= 1 with m^k = 1. Throws DomainError past 10000.
int element_order(const Matrix4& m);

/// Smallest k >= 1 with m^k = +-1.
int projective_order(const Matrix4& m);

bool is_subgroup(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g);
/// Checks g-generator conjugates of h-generators; h must be a subgroup of g.
bool is_normal(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g);
/// [g : h]; throws DomainError when h is not a subgroup of g.
std::size_t index(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g);

/// The group c^-1 g c, generated from the conjugated generators.
FiniteMatrixGroup conjugate_group(const FiniteMatrixGroup& g, const Matrix4& c);

/// Representative of the class of m modulo +-1 (the smaller of m and -m).
Matrix4 projective_key(const Matrix4& m);

/// Image of a matrix group modulo the scalars +-1.
class ProjectiveGroup {
 public:
  explicit ProjectiveGroup(const FiniteMatrixGroup& source);

  const FiniteMatrixGroup& source() const noexcept { return *source_; }
  /// One representative per class, in the order first met in source().elements().
  const std::vector<Matrix4>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  /// Number of scalar matrices (1 or 2) in the source group.
  std::size_t scalar_count() const noexcept { return source_->order() / elements_.size(); }

  bool contains(const Matrix4& m) const { return index_.count(projective_key(m)) != 0; }
  std::size_t index_of(const Matrix4& m) const;

 private:
  const FiniteMatrixGroup* source_;
  std::vector<Matrix4> elements_;
  std::unordered_map<Matrix4, std::size_t> index_;
};

/// The source group must outlive the result.
ProjectiveGroup projectivize(const FiniteMatrixGroup& g);

/// Conjugacy classes of the projective group, each a sorted list of element
/// indices; classes ordered by their smallest index.
std::vector<std::vector<std::size_t>> conjugacy_classes(const ProjectiveGroup& pg);

}  // namespace k3q::groups
