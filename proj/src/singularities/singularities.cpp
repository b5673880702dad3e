// SPDX-License-Identifier: Apache-2.0
#include "k3q/singularities/singularities.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "k3q/error.hpp"
#include "k3q/groups/generators.hpp"
#include "k3q/groups/registry.hpp"

namespace k3q::singularities {

using geometry::ProjectiveLine;
using geometry::ProjectivePoint;
using geometry::Side;
using algebra::Matrix4;

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw DomainError("bad " + std::string(what) + ": " + std::string(s));
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ADEType::ADEType(char kind, int index) : kind_(kind), index_(index) {
  const bool ok = (kind == 'A' && index >= 1) || (kind == 'D' && index >= 4) ||
                  (kind == 'E' && index >= 6 && index <= 8);
  if (!ok) throw DomainError("invalid ADE type " + std::string(1, kind) + std::to_string(index));
}

ADEType ADEType::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2) throw DomainError("bad ADE type: " + std::string(text));
  std::string_view rest = text.substr(1);
  if (rest.front() == '_') rest.remove_prefix(1);
  return ADEType(text.front(), parse_int(rest, "ADE index"));
}

std::string ADEType::str() const { return std::string(1, kind_) + "_" + std::to_string(index_); }

BinaryGroupClass BinaryGroupClass::parse(std::string_view text) {
  text = trim(text);
  using K = Kind;
  if (text == "id" || text == "1") return {K::trivial, 1};
  if (text == "T") return {K::tetrahedral, 12};
  if (text == "O") return {K::octahedral, 24};
  if (text == "I") return {K::icosahedral, 60};
  if (text == "Z2xZ2" || text == "Z_2xZ_2" || text == "V") return {K::dihedral, 2};
  if (text.size() >= 2 && (text.front() == 'Z' || text.front() == 'D')) {
    std::string_view rest = text.substr(1);
    if (rest.front() == '_') rest.remove_prefix(1);
    const int n = parse_int(rest, "group order");
    if (text.front() == 'Z') {
      if (n < 1) throw DomainError("bad cyclic group " + std::string(text));
      return n == 1 ? BinaryGroupClass{K::trivial, 1} : BinaryGroupClass{K::cyclic, n};
    }
    if (n < 2) throw DomainError("bad dihedral group " + std::string(text));
    return {K::dihedral, n};
  }
  throw DomainError("unknown fix-group " + std::string(text));
}

std::string BinaryGroupClass::str() const {
  switch (kind) {
    case Kind::trivial: return "id";
    case Kind::cyclic: return "Z" + std::to_string(n);
    case Kind::dihedral: return n == 2 ? "Z2xZ2" : "D" + std::to_string(n);
    case Kind::tetrahedral: return "T";
    case Kind::octahedral: return "O";
    case Kind::icosahedral: return "I";
  }
  return "?";
}

int BinaryGroupClass::order() const {
  switch (kind) {
    case Kind::trivial: return 1;
    case Kind::cyclic: return n;
    case Kind::dihedral: return 2 * n;
    case Kind::tetrahedral: return 12;
    case Kind::octahedral: return 24;
    case Kind::icosahedral: return 60;
  }
  return 0;
}

ADEType binary_quotient_type(const BinaryGroupClass& f) {
  using K = BinaryGroupClass::Kind;
  switch (f.kind) {
    case K::trivial: return {'A', 1};
    case K::cyclic: return {'A', 2 * f.n - 1};
    case K::dihedral: return {'D', f.n + 2};
    case K::tetrahedral: return {'E', 6};
    case K::octahedral: return {'E', 7};
    case K::icosahedral: return {'E', 8};
  }
  throw DomainError("unknown fix-group");
}

void SingularityReport::add(int multiplicity, const ADEType& t) {
  if (multiplicity < 0) throw DomainError("negative multiplicity");
  if (multiplicity == 0) return;
  for (auto& [m, type] : entries)
    if (type == t) {
      m += multiplicity;
      return;
    }
  entries.emplace_back(multiplicity, t);
  // larger types first: 2E_7+A_1
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return b.second < a.second; });
}

int SingularityReport::total_rank() const {
  int r = 0;
  for (const auto& [m, t] : entries) r += m * t.rank();
  return r;
}

std::string SingularityReport::str() const {
  if (entries.empty()) return "-";
  std::string out;
  for (const auto& [m, t] : entries) {
    if (!out.empty()) out += "+";
    if (m != 1) out += std::to_string(m);
    out += t.str();
  }
  return out;
}

ADEType quadric_point_singularity(int transversal_order, int along_order) {
  if (transversal_order < 2 || along_order < 1) throw DomainError("point stabilizer factors must be nontrivial");
  return {'A', transversal_order - 1};
}

SingularityReport off_quadric_singularities(int line_order, int orbit_count) {
  if (line_order < 2 || line_order > 4) throw DomainError("fix-line order must be 2, 3 or 4");
  SingularityReport r;
  r.add(orbit_count, ADEType('A', line_order - 1));
  return r;
}

// ---- analyses --------------------------------------------------------------

std::vector<QuadricPointClass> quadric_point_classes(std::string_view group, int degree) {
  const auto& pg = groups::registry_projective(group);
  std::vector<ProjectiveLine> ruling[2];
  for (const auto& l : geometry::all_fix_lines(pg))
    if (auto s = geometry::ruling_side(l)) ruling[*s == Side::left ? 0 : 1].push_back(l);

  std::map<std::tuple<int, int, int, std::size_t>, int> counts;
  for (Side s : {Side::left, Side::right}) {
    const Side other = s == Side::left ? Side::right : Side::left;
    const auto& own_base = geometry::base_locus(degree, s);
    const auto& other_base = geometry::base_locus(degree, other);
    std::map<ProjectivePoint, std::pair<ProjectiveLine, ProjectiveLine>> points;
    for (const auto& a : ruling[s == Side::left ? 0 : 1]) {
      if (std::binary_search(own_base.begin(), own_base.end(), a)) continue;
      for (const auto& b : other_base)
        if (auto p = geometry::intersection(a, b)) points.emplace(*p, std::make_pair(a, b));
    }
    std::set<ProjectivePoint> covered;
    for (const auto& [p, lines] : points) {
      if (covered.count(p)) continue;
      const auto orb = geometry::point_orbit(pg, p);
      covered.insert(orb.begin(), orb.end());
      const int fa = static_cast<int>(geometry::fix_group(pg, lines.first).size());
      const int fb = static_cast<int>(geometry::fix_group(pg, lines.second).size());
      const int left = s == Side::left ? fa : fb;
      const int right = s == Side::left ? fb : fa;
      ++counts[{left, right, s == Side::left ? 0 : 1, orb.size()}];
    }
  }
  std::vector<QuadricPointClass> out;
  for (const auto& [key, n] : counts) {
    const auto [left, right, side, length] = key;
    const Side s = side == 0 ? Side::left : Side::right;
    const int t = s == Side::left ? left : right;
    out.push_back({left, right, s, length, n, quadric_point_singularity(t, s == Side::left ? right : left)});
  }
  return out;
}

const std::vector<LineClass>& line_classes(std::string_view group) {
  static const std::map<std::string, std::vector<LineClass>, std::less<>> table = [] {
    std::map<std::string, std::vector<LineClass>, std::less<>> t;
    const std::vector<LineClass> m123 = {{"M1", "(q1,q1)"}, {"M2", "(q1,q2)"}, {"M3", "(q1,q3)"}};
    t["TxV"] = m123;
    t["TT1"] = m123;
    t["TT1"].push_back({"N", "(p3,p3)"});
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        t["VxV"].push_back({"M" + std::to_string(i) + std::to_string(j),
                            "(q" + std::to_string(i) + ",q" + std::to_string(j) + ")"});
    t["OxT"] = {{"M", "(q1,q1)"}, {"N", "(p3,p3)"}, {"M'", "(p4q2,q2)"}};
    t["OO2"] = {{"R", "(p4,p4)"}, {"N", "(p3,p3)"}, {"N'", "(p3^2,p3)"}, {"M", "(p4q2,p4q2)"}};
    t["TxT"] = {{"M", "(q2,q2)"}, {"N", "(p3,p3)"}, {"N'", "(p3^2,p3)"}};
    return t;
  }();
  auto it = table.find(group);
  if (it == table.end()) throw DomainError("no line classes for group " + std::string(group));
  return it->second;
}

namespace {

std::vector<ProjectiveLine> off_quadric_lines(const Matrix4& m) {
  std::vector<ProjectiveLine> out;
  for (const auto& l : geometry::fix_lines(m))
    if (!geometry::in_quadric(l)) out.push_back(l.with_type(geometry::LineType::none));
  return out;
}

std::vector<OffQuadricLineOrbit> compute_line_orbits(std::string_view group, int degree) {
  const auto& pg = groups::registry_projective(group);
  std::vector<ProjectiveLine> lines;
  for (const auto& l : geometry::all_fix_lines(pg))
    if (!geometry::in_quadric(l)) lines.push_back(l);
  auto orbits = geometry::line_orbits(pg, lines);

  auto make = [&](const std::string& name, const ProjectiveLine& rep, std::size_t length) {
    const std::size_t f = geometry::fix_group(pg, rep).size();
    const std::size_t h = geometry::stabilizer(pg, rep).size();
    return OffQuadricLineOrbit{name, rep, length, f, h / f, geometry::points_off_quadric(rep, degree)};
  };

  std::vector<OffQuadricLineOrbit> out;
  std::vector<bool> used(orbits.size(), false);
  for (const auto& cls : line_classes(group)) {
    const auto own = off_quadric_lines(groups::parse_element(cls.element));
    if (own.empty()) throw DomainError("class " + cls.name + " has no fix-line off the quadric");
    int found = -1;
    for (std::size_t k = 0; k < orbits.size(); ++k)
      if (std::binary_search(orbits[k].begin(), orbits[k].end(), own.front())) found = static_cast<int>(k);
    if (found < 0) throw DomainError("class " + cls.name + " lines not found");
    for (const auto& l : own)
      if (!std::binary_search(orbits[found].begin(), orbits[found].end(), l))
        throw DomainError("fix-lines of class " + cls.name + " lie in different orbits");
    if (used[found]) throw DomainError("class " + cls.name + " repeats an orbit");
    used[found] = true;
    out.push_back(make(cls.name, own.front(), orbits[found].size()));
  }
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (!used[k]) out.push_back(make("", orbits[k].front(), orbits[k].size()));
  return out;
}

}  // namespace

std::vector<OffQuadricLineOrbit> off_quadric_line_orbits(std::string_view group, int degree) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::vector<OffQuadricLineOrbit>> cache;
  const auto key = std::make_pair(std::string(group), degree);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = compute_line_orbits(group, degree);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

int base_line_orbit_count(std::string_view group, int degree) {
  const auto& pg = groups::registry_projective(group);
  return static_cast<int>(geometry::line_orbits(pg, geometry::base_locus(degree)).size());
}

// ---- singular fibers -------------------------------------------------------

std::vector<LineIncidence> parse_meeting(std::string_view text) {
  text = trim(text);
  std::vector<LineIncidence> out;
  if (text.empty() || text == "-") return out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = item.rfind(':');
    if (colon == std::string_view::npos) throw DomainError("meeting entry needs ':k': " + std::string(item));
    LineIncidence inc{{}, parse_int(trim(item.substr(colon + 1)), "line count")};
    if (inc.k < 1) throw DomainError("line count must be positive");
    std::string_view names = item.substr(0, colon);
    while (true) {
      const auto bar = names.find('|');
      const auto name = trim(names.substr(0, bar));
      if (name.empty()) throw DomainError("empty class name in meeting entry");
      inc.classes.emplace_back(name);
      if (bar == std::string_view::npos) break;
      names = names.substr(bar + 1);
    }
    out.push_back(std::move(inc));
  }
  return out;
}

std::string format_meeting(const std::vector<LineIncidence>& m) {
  if (m.empty()) return "-";
  std::string out;
  for (const auto& inc : m) {
    if (!out.empty()) out += ",";
    for (std::size_t k = 0; k < inc.classes.size(); ++k) out += (k ? "|" : "") + inc.classes[k];
    out += ":" + std::to_string(inc.k);
  }
  return out;
}

const std::vector<NodeOrbitRecord>& builtin_node_data() {
  static const std::vector<NodeOrbitRecord> data = [] {
    struct Raw {
      const char* group;
      int fiber, count, orbits;
      const char* fix;
      const char* meet;
    };
    // every node lies on three of the nine M_ij lines
    const std::string vxv_meet = "M11|M12|M13|M21|M22|M23|M31|M32|M33:3";
    const Raw raw[] = {
        {"TxV", 1, 12, 1, "Z2xZ2", "M1:1,M2:1,M3:1"},
        {"TxV", 2, 48, 1, "id", "-"},
        {"TxV", 3, 48, 1, "id", "-"},
        {"TxV", 4, 12, 1, "Z2xZ2", "M1:1,M2:1,M3:1"},
        {"TT1", 1, 12, 3, "T", "M1|M2|M3:3,N:4"},
        {"TT1", 2, 48, 3, "Z3", "N:1"},
        {"TT1", 3, 48, 1, "id", "-"},
        {"TT1", 4, 12, 1, "Z2xZ2", "M1:1,M2:1,M3:1"},
        {"VxV", 1, 12, 3, "Z2xZ2", vxv_meet.c_str()},
        {"VxV", 2, 48, 3, "id", "-"},
        {"VxV", 3, 48, 3, "id", "-"},
        {"VxV", 4, 12, 3, "Z2xZ2", vxv_meet.c_str()},
        {"OxT", 1, 24, 1, "T", "M:3,N:4"},
        {"OxT", 2, 72, 1, "Z2xZ2", "M:1,M':2"},
        {"OxT", 3, 144, 1, "Z2", "M':1"},
        {"OxT", 4, 96, 1, "Z3", "N:1"},
        {"OO2", 1, 24, 2, "O", "R:3,N|N':4,M:6"},
        {"OO2", 2, 72, 1, "Z4", "R:1"},
        {"OO2", 3, 144, 1, "Z2", "M:1"},
        {"OO2", 4, 96, 2, "D3", "N|N':1,M:3"},
        {"TxT", 1, 24, 2, "T", "M:3,N|N':4"},
        {"TxT", 2, 72, 1, "Z2", "M:1"},
        {"TxT", 3, 144, 1, "id", "-"},
        {"TxT", 4, 96, 2, "Z3", "N|N':1"},
    };
    std::vector<NodeOrbitRecord> out;
    for (const Raw& r : raw)
      out.push_back({r.group, r.fiber, r.count, r.orbits, BinaryGroupClass::parse(r.fix), parse_meeting(r.meet)});
    return out;
  }();
  return data;
}

SingularityReport node_singularities(const NodeOrbitRecord& r) {
  SingularityReport out;
  out.add(r.orbit_count, binary_quotient_type(r.fix_group));
  return out;
}

namespace {

const NodeOrbitRecord* find_record(std::string_view group, int fiber, const std::vector<NodeOrbitRecord>& data) {
  if (fiber == 0) return nullptr;
  if (fiber < 0 || fiber > 4) throw DomainError("fiber must be smooth or 1..4");
  for (const auto& r : data)
    if (r.group == group && r.fiber == fiber) return &r;
  throw DomainError("missing node data for " + std::string(group) + " fiber " + std::to_string(fiber));
}

}  // namespace

SingularityReport off_quadric_report(std::string_view group, int degree, int fiber,
                                     const std::vector<NodeOrbitRecord>& node_data) {
  const NodeOrbitRecord* rec = find_record(group, fiber, node_data);
  const auto orbits = off_quadric_line_orbits(group, degree);
  if (rec) {
    for (const auto& inc : rec->meeting)
      for (const auto& c : inc.classes)
        if (std::none_of(orbits.begin(), orbits.end(), [&](const auto& o) { return o.class_name == c; }))
          throw DomainError("unknown line class " + c + " for group " + std::string(group));
  }
  SingularityReport out;
  for (const auto& o : orbits) {
    int used = 0;
    if (rec) {
      for (const auto& inc : rec->meeting) {
        if (std::find(inc.classes.begin(), inc.classes.end(), o.class_name) == inc.classes.end()) continue;
        const long total = static_cast<long>(rec->node_count) * inc.k;
        const long per_class = static_cast<long>(inc.classes.size());
        const long lines = static_cast<long>(o.orbit_length);
        if (total % (per_class * lines) != 0) throw DomainError("node incidences do not divide evenly over class " + o.class_name);
        used += 2 * static_cast<int>(total / (per_class * lines));
      }
    }
    const int remaining = o.points - used;
    if (remaining < 0 || remaining % static_cast<int>(o.ratio) != 0)
      throw DomainError("inconsistent node incidences on class " + o.class_name);
    out.add(remaining / static_cast<int>(o.ratio), ADEType('A', static_cast<int>(o.fixer_order) - 1));
  }
  return out;
}

NuTotals nu_totals(std::string_view group, int degree, int fiber, const std::vector<NodeOrbitRecord>& node_data) {
  const NodeOrbitRecord* rec = find_record(group, fiber, node_data);
  NuTotals t{};
  t.nu1 = base_line_orbit_count(group, degree);
  for (const auto& c : quadric_point_classes(group, degree)) t.nu2 += c.number * c.type.rank();
  t.nu3 = off_quadric_report(group, degree, fiber, node_data).total_rank();
  t.nu4 = rec ? node_singularities(*rec).total_rank() : 0;
  return t;
}

}  // namespace k3q::singularities
