// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3q/groups/group.hpp"

namespace k3q::groups {

struct GroupInfo {
  std::string label;    ///< registry key, e.g. "TT1"
  std::string display;  ///< printed name, e.g. "(TT)'"
  std::vector<std::string> generators;
  std::string parent;   ///< ambient group label ("TxT" or "OxO"); empty for OxO
  int degree;           ///< degree of the invariant pencil the group acts on
};

/// The seven registered groups in table order: TxV, TT1, VxV, OxT, OO2, TxT, OxO.
const std::vector<GroupInfo>& registry();

/// Throws DomainError "unknown group <label>".
const GroupInfo& group_info(std::string_view label);

/// Generated on first use and cached; safe to call from several threads.
const FiniteMatrixGroup& registry_group(std::string_view label);
const ProjectiveGroup& registry_projective(std::string_view label);

/// The six normal subgroups (every label except OxO).
std::vector<std::string> subgroup_labels();

}  // namespace k3q::groups
