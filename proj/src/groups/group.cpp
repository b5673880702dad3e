// SPDX-License-Identifier: Apache-2.0
#include "k3q/groups/group.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "k3q/error.hpp"

namespace k3q::groups {

FiniteMatrixGroup FiniteMatrixGroup::generate(std::string name, std::vector<Matrix4> generators, std::size_t cap) {
  FiniteMatrixGroup g;
  g.name_ = std::move(name);
  g.generators_ = std::move(generators);
  auto add = [&](const Matrix4& m) {
    if (g.index_.emplace(m, g.elements_.size()).second) {
      if (g.elements_.size() >= cap) throw DomainError("group too large or not finite");
      g.elements_.push_back(m);
      return true;
    }
    return false;
  };
  add(Matrix4::identity());
  // Products of elements with generators; in a finite group this is already
  // closed under inverses.
  for (std::size_t next = 0; next < g.elements_.size(); ++next) {
    for (const Matrix4& s : g.generators_) add(s * g.elements_[next]);
  }
  return g;
}

std::size_t FiniteMatrixGroup::index_of(const Matrix4& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw DomainError("element not in group " + name_);
  return it->second;
}

int element_order(const Matrix4& m) {
  Matrix4 p = m;
  for (int k = 1; k <= 10000; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  throw DomainError("element of infinite order");
}

int projective_order(const Matrix4& m) {
  const Matrix4 minus_one = -Matrix4::identity();
  Matrix4 p = m;
  for (int k = 1; k <= 10000; ++k) {
    if (p.is_identity() || p == minus_one) return k;
    p = p * m;
  }
  throw DomainError("element of infinite order");
}

bool is_subgroup(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g) {
  if (g.order() % h.order() != 0) return false;
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const Matrix4& m) { return g.contains(m); });
}

bool is_normal(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g) {
  if (!is_subgroup(h, g)) return false;
  for (const Matrix4& x : g.generators()) {
    const Matrix4 xi = x.inverse();
    for (const Matrix4& y : h.generators())
      if (!h.contains(xi * y * x)) return false;
  }
  return true;
}

std::size_t index(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g) {
  if (!is_subgroup(h, g)) throw DomainError(h.name() + " is not a subgroup of " + g.name());
  return g.order() / h.order();
}

FiniteMatrixGroup conjugate_group(const FiniteMatrixGroup& g, const Matrix4& c) {
  const Matrix4 ci = c.inverse();
  std::vector<Matrix4> gens;
  gens.reserve(g.generators().size());
  for (const Matrix4& m : g.generators()) gens.push_back(ci * m * c);
  return FiniteMatrixGroup::generate(g.name() + "^c", std::move(gens), std::max(g.order(), std::size_t{1}));
}

Matrix4 projective_key(const Matrix4& m) {
  Matrix4 neg = -m;
  return neg < m ? neg : m;
}

ProjectiveGroup::ProjectiveGroup(const FiniteMatrixGroup& source) : source_(&source) {
  for (const Matrix4& m : source.elements()) {
    Matrix4 key = projective_key(m);
    if (index_.emplace(key, elements_.size()).second) elements_.push_back(m);
  }
}

std::size_t ProjectiveGroup::index_of(const Matrix4& m) const {
  auto it = index_.find(projective_key(m));
  if (it == index_.end()) throw DomainError("element not in projective group of " + source_->name());
  return it->second;
}

ProjectiveGroup projectivize(const FiniteMatrixGroup& g) { return ProjectiveGroup(g); }

std::vector<std::vector<std::size_t>> conjugacy_classes(const ProjectiveGroup& pg) {
  std::vector<Matrix4> gens, gens_inv;
  for (const Matrix4& s : pg.source().generators()) {
    gens.push_back(s);
    gens_inv.push_back(s.inverse());
  }
  std::vector<int> class_of(pg.order(), -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t start = 0; start < pg.order(); ++start) {
    if (class_of[start] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::vector<std::size_t> cls{start};
    class_of[start] = id;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const Matrix4& x = pg.elements()[cls[k]];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t y = pg.index_of(gens_inv[j] * x * gens[j]);
        if (class_of[y] < 0) {
          class_of[y] = id;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace k3q::groups
