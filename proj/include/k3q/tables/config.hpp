// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3q/lattices/lattice.hpp"
#include "k3q/singularities/singularities.hpp"

namespace k3q::tables {

/// Contents of a line-based data file.
///
///   curve <name> [self=<int>]
///   edge <a> <b> [mult=<int>]
///   class <name> = <term> <term> ...      terms: [+|-][<int>][*]<curve>
///   node <group> <fiber> count=<int> orbits=<int> fix=<group class> [meet=<incidences>]
///
/// '#' starts a comment. Names must be declared before they are used.
struct ConfigFile {
  lattices::CurveGraph graph;
  std::vector<lattices::DivisorClass> classes;  ///< coefficients in graph order
  std::vector<singularities::NodeOrbitRecord> nodes;

  /// Throws DomainError "unknown class X".
  const lattices::DivisorClass& find_class(std::string_view name) const;
  lattices::IntegralLattice lattice() const { return lattices::gram_from_graph(graph); }
  friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

/// Throws ParseError carrying the 1-based line number.
ConfigFile parse_config(std::string_view text);
/// Reads and parses a file; throws Error if it cannot be opened.
ConfigFile load_config(const std::string& path);
/// Canonical text; parse_config(emit_config(c)) == c.
std::string emit_config(const ConfigFile& c);

}  // namespace k3q::tables
