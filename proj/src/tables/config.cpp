// SPDX-License-Identifier: Apache-2.0
#include "k3q/tables/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "k3q/error.hpp"
#include "k3q/groups/registry.hpp"

namespace k3q::tables {

using lattices::DivisorClass;
using singularities::BinaryGroupClass;
using singularities::NodeOrbitRecord;

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    if (k > start) out.emplace_back(line.substr(start, k - start));
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

class Parser {
 public:
  ConfigFile run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_;
      std::string_view raw = text.substr(pos, end - pos);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      auto words = split_words(raw);
      if (!words.empty()) statement(words);
      pos = end + 1;
    }
    for (auto& c : out_.classes) c.coeffs.resize(out_.graph.size(), 0);
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

  // Splits "key=value" options after the positional words.
  std::map<std::string, std::string> options(const std::vector<std::string>& w, std::size_t from,
                                             std::initializer_list<const char*> allowed) const {
    std::map<std::string, std::string> out;
    for (std::size_t k = from; k < w.size(); ++k) {
      auto eq = w[k].find('=');
      if (eq == std::string::npos || eq == 0) fail("expected key=value, got '" + w[k] + "'");
      std::string key = w[k].substr(0, eq);
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) fail("unknown option '" + key + "'");
      if (!out.emplace(key, w[k].substr(eq + 1)).second) fail("repeated option '" + key + "'");
    }
    return out;
  }

  std::int64_t int_option(const std::map<std::string, std::string>& o, const std::string& key,
                          std::optional<std::int64_t> fallback) const {
    auto it = o.find(key);
    if (it == o.end()) {
      if (!fallback) fail("missing " + key + "=");
      return *fallback;
    }
    auto v = to_int(it->second);
    if (!v) fail("bad integer '" + it->second + "' for " + key);
    return *v;
  }

  void statement(const std::vector<std::string>& w) {
    try {
      if (w[0] == "curve") return curve(w);
      if (w[0] == "edge") return edge(w);
      if (w[0] == "class") return divisor(w);
      if (w[0] == "node") return node(w);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
    fail("unknown statement '" + w[0] + "'");
  }

  void curve(const std::vector<std::string>& w) {
    if (w.size() < 2) fail("curve needs a name");
    auto o = options(w, 2, {"self"});
    out_.graph.add_curve(w[1], int_option(o, "self", -2));
  }

  void edge(const std::vector<std::string>& w) {
    if (w.size() < 3) fail("edge needs two curves");
    auto o = options(w, 3, {"mult"});
    out_.graph.add_edge(w[1], w[2], int_option(o, "mult", 1));
  }

  void divisor(const std::vector<std::string>& w) {
    if (w.size() < 4 || w[2] != "=") fail("expected 'class <name> = <terms>'");
    for (const auto& c : out_.classes)
      if (c.name == w[1]) fail("duplicate class " + w[1]);
    DivisorClass c{w[1], std::vector<std::int64_t>(out_.graph.size(), 0)};
    for (std::size_t k = 3; k < w.size(); ++k) {
      std::string_view t = w[k];
      std::int64_t sign = 1;
      if (t.front() == '+' || t.front() == '-') {
        sign = t.front() == '-' ? -1 : 1;
        t.remove_prefix(1);
      }
      std::size_t digits = 0;
      while (digits < t.size() && t[digits] >= '0' && t[digits] <= '9') ++digits;
      std::int64_t coef = 1;
      if (digits > 0) coef = *to_int(t.substr(0, digits));
      t.remove_prefix(digits);
      if (!t.empty() && t.front() == '*') {
        if (digits == 0) fail("bad term '" + w[k] + "'");
        t.remove_prefix(1);
      }
      if (t.empty()) fail("bad term '" + w[k] + "'");
      c.coeffs[out_.graph.index_of(t)] += sign * coef;
    }
    out_.classes.push_back(std::move(c));
  }

  void node(const std::vector<std::string>& w) {
    if (w.size() < 3) fail("node needs a group and a fiber");
    groups::group_info(w[1]);
    auto fiber = to_int(w[2]);
    if (!fiber || *fiber < 1 || *fiber > 4) fail("fiber must be 1..4");
    auto o = options(w, 3, {"count", "orbits", "fix", "meet"});
    NodeOrbitRecord r;
    r.group = w[1];
    r.fiber = static_cast<int>(*fiber);
    r.node_count = static_cast<int>(int_option(o, "count", std::nullopt));
    r.orbit_count = static_cast<int>(int_option(o, "orbits", std::nullopt));
    if (r.node_count < 1 || r.orbit_count < 1) fail("count and orbits must be positive");
    if (!o.count("fix")) fail("missing fix=");
    r.fix_group = BinaryGroupClass::parse(o["fix"]);
    r.meeting = singularities::parse_meeting(o.count("meet") ? o["meet"] : "-");
    for (const auto& n : out_.nodes)
      if (n.group == r.group && n.fiber == r.fiber) fail("duplicate node record " + r.group + " " + w[2]);
    out_.nodes.push_back(std::move(r));
  }

  ConfigFile out_;
  int line_ = 0;
};

}  // namespace

const DivisorClass& ConfigFile::find_class(std::string_view name) const {
  for (const auto& c : classes)
    if (c.name == name) return c;
  throw DomainError("unknown class " + std::string(name));
}

ConfigFile parse_config(std::string_view text) { return Parser().run(text); }

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string emit_config(const ConfigFile& c) {
  std::ostringstream os;
  const auto& g = c.graph;
  for (std::size_t k = 0; k < g.size(); ++k) {
    os << "curve " << g.names()[k];
    if (g.self_intersections()[k] != -2) os << " self=" << g.self_intersections()[k];
    os << '\n';
  }
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (auto m = g.multiplicity(a, b)) {
        os << "edge " << g.names()[a] << ' ' << g.names()[b];
        if (m != 1) os << " mult=" << m;
        os << '\n';
      }
  for (const auto& cls : c.classes) {
    os << "class " << cls.name << " =";
    bool any = false;
    for (std::size_t k = 0; k < cls.coeffs.size(); ++k) {
      auto v = cls.coeffs[k];
      if (v == 0) continue;
      any = true;
      os << ' ' << (v < 0 ? '-' : '+');
      if (v != 1 && v != -1) os << (v < 0 ? -v : v) << '*';
      os << g.names()[k];
    }
    if (!any && g.size() > 0) os << " 0*" << g.names()[0];
    os << '\n';
  }
  for (const auto& n : c.nodes)
    os << "node " << n.group << ' ' << n.fiber << " count=" << n.node_count << " orbits=" << n.orbit_count
       << " fix=" << n.fix_group.str() << " meet=" << singularities::format_meeting(n.meeting) << '\n';
  return os.str();
}

}  // namespace k3q::tables
