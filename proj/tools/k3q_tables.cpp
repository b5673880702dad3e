// SPDX-License-Identifier: Apache-2.0
// k3q-tables: reproduce and verify the quotient tables.
//
// Exit codes: 0 everything passed, 1 a mismatch, 2 usage or input error.
#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <optional>

#include "k3q/error.hpp"
#include "k3q/geometry/geometry.hpp"
#include "k3q/groups/registry.hpp"
#include "k3q/lattices/lattice.hpp"
#include "k3q/singularities/singularities.hpp"
#include "k3q/tables/config.hpp"
#include "k3q/tables/report.hpp"
#include "k3q/tables/verify.hpp"

namespace {

using namespace k3q;
using geometry::Side;
using tables::Report;

struct Options {
  std::string format = "tsv";
  std::string group;
  int degree = 0;
  std::string fiber = "smooth";
  std::string file;
  std::string nodes;
  std::string cls;
  int p = 2;
  std::string table = "all";
  std::string lattice_cmd;
};

int degree_for(const Options& o) { return o.degree ? o.degree : groups::group_info(o.group).degree; }

int fiber_number(const std::string& f) {
  if (f == "smooth" || f == "0") return 0;
  if (f.size() == 1 && f[0] >= '1' && f[0] <= '4') return f[0] - '0';
  throw DomainError("fiber must be smooth or 1..4, got " + f);
}

std::vector<singularities::NodeOrbitRecord> node_data(const Options& o) {
  if (o.nodes.empty()) return singularities::builtin_node_data();
  auto data = singularities::builtin_node_data();
  for (const auto& r : tables::load_config(o.nodes).nodes) {
    auto it = std::find_if(data.begin(), data.end(),
                           [&](const auto& d) { return d.group == r.group && d.fiber == r.fiber; });
    if (it != data.end()) *it = r;
    else data.push_back(r);
  }
  return data;
}

Report groups_report() {
  Report r{{"label", "name", "order", "parent", "index", "normal", "degree", "generators"}, {}};
  for (const auto& g : groups::registry()) {
    const auto& h = groups::registry_group(g.label);
    std::string index = "-", normal = "-";
    if (!g.parent.empty()) {
      const auto& parent = groups::registry_group(g.parent);
      index = std::to_string(groups::index(h, parent));
      normal = groups::is_normal(h, parent) ? "yes" : "no";
    }
    std::string gens;
    for (const auto& s : g.generators) gens += (gens.empty() ? "" : " ") + s;
    r.rows.push_back({g.label, g.display, std::to_string(h.order()), g.parent.empty() ? "-" : g.parent, index, normal,
                      std::to_string(g.degree), gens});
  }
  return r;
}

Report orbits_report(const Options& o) {
  Report r{{"kind", "class", "length", "fixer", "ratio", "points"}, {}};
  const auto& pg = groups::registry_projective(o.group);
  for (Side s : {Side::left, Side::right})
    for (const auto& orbit : geometry::orbits_on_ruling(pg, s))
      r.rows.push_back({to_string(s) + " ruling", geometry::to_string(geometry::line_type_for_order(int(orbit.fixer_order))),
                        std::to_string(orbit.length), "Z" + std::to_string(orbit.fixer_order), "-", "-"});
  if (o.group != "OxO")
    for (const auto& l : singularities::off_quadric_line_orbits(o.group, degree_for(o)))
      r.rows.push_back({"off quadric", l.class_name, std::to_string(l.orbit_length), "Z" + std::to_string(l.fixer_order),
                        std::to_string(l.ratio), std::to_string(l.points)});
  return r;
}

Report fixlines_report(const Options& o) {
  Report r{{"type", "position", "length", "fixer", "stabilizer"}, {}};
  const auto& pg = groups::registry_projective(o.group);
  for (const auto& orbit : geometry::line_orbits(pg, geometry::all_fix_lines(pg))) {
    const auto& l = orbit.front();
    auto side = geometry::ruling_side(l);
    std::string pos = side ? to_string(*side) + " ruling" : geometry::tangent_to_quadric(l) ? "tangent" : "off quadric";
    std::size_t fixer = geometry::fix_group(pg, l).size();
    r.rows.push_back({geometry::to_string(geometry::line_type_for_order(int(fixer))), pos, std::to_string(orbit.size()),
                      "Z" + std::to_string(fixer), std::to_string(geometry::stabilizer(pg, l).size())});
  }
  return r;
}

Report sing_report(const Options& o) {
  Report r{{"source", "detail", "sing"}, {}};
  const int d = degree_for(o);
  const int fiber = fiber_number(o.fiber);
  const auto data = node_data(o);
  for (const auto& q : singularities::quadric_point_classes(o.group, d)) {
    singularities::SingularityReport s;
    s.add(q.number, q.type);
    r.rows.push_back({"quadric", "Fix(P) Z" + std::to_string(q.left_order) + "xZ" + std::to_string(q.right_order) +
                                     ", length " + std::to_string(q.length),
                      s.str()});
  }
  r.rows.push_back({"off quadric", "fix-line points", singularities::off_quadric_report(o.group, d, fiber, data).str()});
  if (fiber > 0)
    for (const auto& n : data)
      if (n.group == o.group && n.fiber == fiber)
        r.rows.push_back({"nodes", std::to_string(n.node_count) + " nodes, fix " + n.fix_group.str(),
                          singularities::node_singularities(n).str()});
  return r;
}

Report nu_report(const Options& o) {
  auto t = singularities::nu_totals(o.group, degree_for(o), fiber_number(o.fiber), node_data(o));
  return Report{{"nu1", "nu2", "nu3", "nu4", "nu"},
                {{std::to_string(t.nu1), std::to_string(t.nu2), std::to_string(t.nu3), std::to_string(t.nu4),
                  std::to_string(t.nu())}}};
}

// Returns the exit code.
int lattice_command(const Options& o, Report& out) {
  const auto cfg = tables::load_config(o.file);
  const auto l = cfg.lattice();
  if (o.lattice_cmd == "disc") {
    out = {{"rank", "discriminant", "even"},
           {{std::to_string(l.rank()), lattices::discriminant(l).str(), l.is_even() ? "yes" : "no"}}};
    return 0;
  }
  if (o.lattice_cmd == "group") {
    auto g = lattices::discriminant_group(l);
    out = {{"group", "order", "2-rank", "3-rank"},
           {{g.str(), g.order().str(), std::to_string(g.p_rank(2)), std::to_string(g.p_rank(3))}}};
    return 0;
  }
  if (o.cls.empty()) throw DomainError("--class is required for lattice " + o.lattice_cmd);
  const auto& v = cfg.find_class(o.cls);
  if (o.lattice_cmd == "divisible") {
    bool div = lattices::is_p_divisible(l, v, o.p);
    std::string count;
    try {
      count = lattices::nikulin_count_check(l, v, o.p) ? "yes" : "no";
    } catch (const DomainError& e) {
      count = std::string("no (") + e.what() + ")";
    }
    out = {{"class", "p", "divisible", "curve count"}, {{v.name, std::to_string(o.p), div ? "yes" : "no", count}}};
    return div && count == "yes" ? 0 : 1;
  }
  auto w = lattices::adjoin_class(l, v, o.p);
  out = {{"class", "p", "discriminant before", "discriminant after", "even"},
         {{v.name, std::to_string(o.p), lattices::discriminant(l).str(), lattices::discriminant(w).str(),
           w.is_even() ? "yes" : "no"}}};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reproduce and verify the K3 quotient tables"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "tsv or markdown")->check(CLI::IsMember({"tsv", "markdown"}));

  auto* groups_cmd = app.add_subcommand("groups", "list the registered groups");
  auto* orbits_cmd = app.add_subcommand("orbits", "ruling and off-quadric line orbits");
  orbits_cmd->add_option("--group", o.group)->required();
  orbits_cmd->add_option("--degree", o.degree)->check(CLI::IsMember({6, 8}));
  auto* fix_cmd = app.add_subcommand("fixlines", "orbits of all fix-lines");
  fix_cmd->add_option("--group", o.group)->required();
  auto* sing_cmd = app.add_subcommand("sing", "quotient singularities of one member");
  sing_cmd->add_option("--group", o.group)->required();
  sing_cmd->add_option("--fiber", o.fiber, "smooth or 1..4");
  sing_cmd->add_option("--nodes", o.nodes, "data file with node records")->check(CLI::ExistingFile);
  auto* nu_cmd = app.add_subcommand("nu", "numbers of rational curves");
  nu_cmd->add_option("--group", o.group)->required();
  nu_cmd->add_option("--degree", o.degree)->check(CLI::IsMember({6, 8}));
  nu_cmd->add_option("--fiber", o.fiber, "smooth or 1..4");
  nu_cmd->add_option("--nodes", o.nodes, "data file with node records")->check(CLI::ExistingFile);
  auto* lat_cmd = app.add_subcommand("lattice", "lattice of a curve-graph file");
  lat_cmd->add_option("action", o.lattice_cmd, "disc, group, divisible or adjoin")
      ->required()
      ->check(CLI::IsMember({"disc", "group", "divisible", "adjoin"}));
  lat_cmd->add_option("-f,--file", o.file)->required()->check(CLI::ExistingFile);
  lat_cmd->add_option("--class", o.cls);
  lat_cmd->add_option("-p", o.p)->check(CLI::IsMember({2, 3, 4}));
  auto* verify_cmd = app.add_subcommand("verify", "compare recomputed tables with the printed values");
  verify_cmd->add_option("--table", o.table, "table id or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto format = tables::parse_format(o.format);
    Report report;
    int code = 0;
    if (*groups_cmd) {
      report = groups_report();
    } else if (*orbits_cmd) {
      groups::group_info(o.group);
      report = orbits_report(o);
    } else if (*fix_cmd) {
      groups::group_info(o.group);
      report = fixlines_report(o);
    } else if (*sing_cmd) {
      report = sing_report(o);
    } else if (*nu_cmd) {
      report = nu_report(o);
    } else if (*lat_cmd) {
      code = lattice_command(o, report);
    } else if (*verify_cmd) {
      auto results = tables::run_verification(o.table);
      report = tables::verification_report(results);
      code = tables::all_passed(results) ? 0 : 1;
    }
    std::cout << tables::emit_report(report, format);
    return code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
