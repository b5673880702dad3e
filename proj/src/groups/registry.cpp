// SPDX-License-Identifier: Apache-2.0
#include "k3q/groups/registry.hpp"

#include <memory>
#include <mutex>

#include "k3q/error.hpp"
#include "k3q/groups/generators.hpp"

namespace k3q::groups {

const std::vector<GroupInfo>& registry() {
  // T x V: the (1,p3) generator listed for this group would give all of T x T;
  // (1,q2) is used so the right factor is V.
  static const std::vector<GroupInfo> table = {
      {"TxV", "TxV", {"(q1,1)", "(1,q1)", "(p3,1)", "(1,q2)"}, "TxT", 6},
      {"TT1", "(TT)'", {"(q1,1)", "(1,q1)", "(q2,1)", "(1,q2)", "(p3,p3)"}, "TxT", 6},
      {"VxV", "VxV", {"(q1,1)", "(1,q1)", "(q2,1)", "(1,q2)"}, "TxT", 6},
      {"OxT", "OxT", {"(q1,1)", "(1,q1)", "(p3,1)", "(1,p3)", "(p4,1)"}, "OxO", 8},
      {"OO2", "(OO)''", {"(q1,1)", "(1,q1)", "(p3,1)", "(1,p3)", "(p4q2,p4q2)"}, "OxO", 8},
      {"TxT", "TxT", {"(q1,1)", "(1,q1)", "(p3,1)", "(1,p3)"}, "OxO", 8},
      {"OxO", "OxO", {"(q2,1)", "(1,q2)", "(p3,1)", "(1,p3)", "(p4,1)", "(1,p4)"}, "", 8},
  };
  return table;
}

namespace {

std::size_t slot(std::string_view label) {
  const auto& r = registry();
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i].label == label) return i;
  throw DomainError("unknown group " + std::string(label));
}

struct Cache {
  std::once_flag once;
  std::unique_ptr<FiniteMatrixGroup> group;
  std::unique_ptr<ProjectiveGroup> projective;
};

Cache& cache(std::size_t i) {
  static Cache entries[7];
  return entries[i];
}

}  // namespace

const GroupInfo& group_info(std::string_view label) { return registry()[slot(label)]; }

const FiniteMatrixGroup& registry_group(std::string_view label) {
  const std::size_t i = slot(label);
  Cache& c = cache(i);
  std::call_once(c.once, [&] {
    const GroupInfo& info = registry()[i];
    std::vector<Matrix4> gens;
    for (const auto& w : info.generators) gens.push_back(parse_element(w));
    c.group = std::make_unique<FiniteMatrixGroup>(FiniteMatrixGroup::generate(info.label, std::move(gens)));
    c.projective = std::make_unique<ProjectiveGroup>(*c.group);
  });
  return *c.group;
}

const ProjectiveGroup& registry_projective(std::string_view label) {
  registry_group(label);
  return *cache(slot(label)).projective;
}

std::vector<std::string> subgroup_labels() { return {"TxV", "TT1", "VxV", "OxT", "OO2", "TxT"}; }

}  // namespace k3q::groups
