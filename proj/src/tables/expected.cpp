// SPDX-License-Identifier: Apache-2.0
// Printed values of the quotient tables, transcribed cell by cell.
#include <sstream>

#include "k3q/error.hpp"
#include "k3q/tables/verify.hpp"

namespace k3q::tables {

namespace {

const char* const kSubgroups = "subgroup table";
const char* const kRulings = "ruling orbit tables";
const char* const kMeeting = "meeting points of the base-locus lines";
const char* const kFixLines = "off-quadric fix-line tables";
const char* const kQuadric = "singularities at points of the quadric";
const char* const kOffQuadric = "singularities off the quadric";
const char* const kNodes = "singularities from nodes of the singular members";
const char* const kNuSmooth = "rational curves on the smooth quotients";
const char* const kNuSingular = "rational curves on the singular quotients";
const char* const kClasses = "divisible classes and their supports";
const char* const kDiscs = "discriminants before and after adjoining divisible classes";
const char* const kAdeDet = "root lattice determinants";
const char* const kComponents = "component discriminants of the cyclic-cover lattices";

const char* const kAll[] = {"TxV", "TT1", "VxV", "OxT", "OO2", "TxT"};

ExpectedTable subgroups() {
  ExpectedTable t{"subgroups", "Normal subgroups", {}};
  const char* order[] = {"96", "96", "32", "576", "576", "288"};
  const char* index[] = {"3", "3", "9", "2", "2", "4"};
  for (int k = 0; k < 6; ++k) {
    std::string g = kAll[k];
    t.cells.push_back({g + " order", order[k], kSubgroups});
    t.cells.push_back({g + " index", index[k], kSubgroups});
    t.cells.push_back({g + " normal", "yes", kSubgroups});
  }
  return t;
}

// Orbit lengths listed under fixer orders 2 | 3 | 4.
ExpectedTable rulings() {
  ExpectedTable t{"rulings", "Orbits of ruling lines with nontrivial fixer", {}};
  struct Row {
    const char* g;
    const char* left;
    const char* right;
  };
  for (Row r : {Row{"TxV", "6 | 4,4 | -", "2,2,2 | - | -"}, Row{"TT1", "6 | - | -", "6 | - | -"},
                Row{"VxV", "2,2,2 | - | -", "2,2,2 | - | -"}, Row{"OxT", "12 | 8 | 6", "6 | 4,4 | -"},
                Row{"OO2", "6 | 8 | -", "6 | 8 | -"}, Row{"TxT", "6 | 4,4 | -", "6 | 4,4 | -"}}) {
    t.cells.push_back({std::string(r.g) + " left", r.left, kRulings});
    t.cells.push_back({std::string(r.g) + " right", r.right, kRulings});
  }
  return t;
}

ExpectedTable meeting() {
  ExpectedTable t{"meeting", "Orbits of meeting points of base lines", {}};
  for (const char* g : {"TxV", "VxV", "OxT", "TxT"}) t.cells.push_back({std::string(g) + " orbits per block", "1", kMeeting});
  t.cells.push_back({"TT1 orbit lengths", "12,12,12", kMeeting});
  t.cells.push_back({"OO2 orbit lengths", "32,32", kMeeting});
  return t;
}

struct LineRow {
  const char* g;
  const char* cls;
  const char* length;
  const char* fixer;
  const char* ratio;
  const char* ratio_corrected;
};

const std::vector<LineRow>& line_rows() {
  static const std::vector<LineRow> rows = [] {
    std::vector<LineRow> r;
    for (const char* c : {"M1", "M2", "M3"}) r.push_back({"TxV", c, "6", "Z2", "4", ""});
    for (const char* c : {"M1", "M2", "M3"}) r.push_back({"TT1", c, "6", "Z2", "4", ""});
    r.push_back({"TT1", "N", "16", "Z3", "1", ""});
    for (const char* c : {"M11", "M12", "M13", "M21", "M22", "M23", "M31", "M32", "M33"})
      r.push_back({"VxV", c, "2", "Z2", "4", ""});
    r.push_back({"OxT", "M", "18", "Z2", "8", ""});
    r.push_back({"OxT", "N", "32", "Z3", "3", ""});
    r.push_back({"OxT", "M'", "36", "Z2", "3", "4"});
    r.push_back({"OO2", "R", "18", "Z4", "4", ""});
    r.push_back({"OO2", "N", "16", "Z3", "8", "6"});
    r.push_back({"OO2", "N'", "16", "Z3", "8", "6"});
    r.push_back({"OO2", "M", "72", "Z2", "2", ""});
    r.push_back({"TxT", "M", "18", "Z2", "4", ""});
    r.push_back({"TxT", "N", "16", "Z3", "3", ""});
    r.push_back({"TxT", "N'", "16", "Z3", "3", ""});
    return r;
  }();
  return rows;
}

ExpectedTable fixlines() {
  ExpectedTable t{"fixlines", "Off-quadric fix-lines: orbit length, fixer, |H_L|/|F_L|", {}};
  for (const auto& r : line_rows()) {
    std::string k = std::string(r.g) + " " + r.cls;
    t.cells.push_back({k + " length", r.length, kFixLines});
    t.cells.push_back({k + " fixer", r.fixer, kFixLines});
    t.cells.push_back({k + " ratio", r.ratio, kFixLines, r.ratio_corrected});
  }
  return t;
}

ExpectedTable sing() {
  ExpectedTable t{"sing", "Quotient singularities", {}};
  struct Quadric {
    const char* g;
    const char* fix;
    const char* length;
    const char* number;
    const char* sing;
  };
  for (Quadric q : {Quadric{"TxV", "Z3xZ2", "8", "6", "6A2"}, Quadric{"OxT", "Z3xZ2", "48", "1", "A1"},
                    Quadric{"OxT", "Z4xZ3", "24", "2", "2A3"}, Quadric{"OxT", "Z2xZ3", "48", "2", "2A1"},
                    Quadric{"OO2", "Z2xZ3", "48", "1", "A1"}, Quadric{"OO2", "Z3xZ2", "48", "1", "A1"},
                    Quadric{"TxT", "Z3xZ2", "24", "2", "2A1"}, Quadric{"TxT", "Z2xZ3", "24", "2", "2A1"}}) {
    std::string k = std::string(q.g) + " quadric " + q.fix;
    t.cells.push_back({k + " length", q.length, kQuadric});
    t.cells.push_back({k + " number", q.number, kQuadric});
    t.cells.push_back({k + " sing", q.sing, kQuadric});
  }
  struct Points {
    const char* g;
    int order;
    const char* points;
  };
  for (Points p : {Points{"TxV", 2, "4"}, Points{"TT1", 2, "4"}, Points{"TT1", 3, "6"}, Points{"VxV", 2, "4"},
                   Points{"OxT", 2, "8"}, Points{"OxT", 3, "6"}, Points{"OO2", 4, "8"}, Points{"OO2", 3, "6"},
                   Points{"TxT", 2, "8"}, Points{"TxT", 3, "6"}})
    t.cells.push_back({std::string(p.g) + " points on lines of order " + std::to_string(p.order), p.points, kOffQuadric});
  struct Off {
    const char* g;
    const char* cls;
    const char* o;
    const char* length;
    const char* length_corrected;
    const char* number;
    const char* sing;
  };
  std::vector<Off> off;
  for (const char* g : {"TxV", "TT1"})
    for (const char* c : {"M1", "M2", "M3"}) off.push_back({g, c, "2", "4", "", "1", "A1"});
  off.push_back({"TT1", "N", "3", "1", "", "6", "6A2"});
  for (const char* c : {"M11", "M12", "M13", "M21", "M22", "M23", "M31", "M32", "M33"})
    off.push_back({"VxV", c, "2", "4", "", "1", "A1"});
  off.push_back({"OxT", "M", "2", "8", "", "1", "A1"});
  off.push_back({"OxT", "N", "3", "3", "", "2", "2A2"});
  off.push_back({"OxT", "M'", "2", "3", "4", "2", "2A1"});
  off.push_back({"OO2", "R", "4", "4", "", "2", "2A3"});
  off.push_back({"OO2", "N", "3", "6", "", "1", "A2"});
  off.push_back({"OO2", "N'", "3", "6", "", "1", "A2"});
  off.push_back({"OO2", "M", "2", "2", "", "4", "4A1"});
  off.push_back({"TxT", "M", "2", "4", "", "2", "2A1"});
  off.push_back({"TxT", "N", "3", "3", "", "2", "2A2"});
  off.push_back({"TxT", "N'", "3", "3", "", "2", "2A2"});
  for (const auto& o : off) {
    std::string k = std::string(o.g) + " " + o.cls;
    t.cells.push_back({k + " order", o.o, kOffQuadric});
    t.cells.push_back({k + " length", o.length, kOffQuadric, o.length_corrected});
    t.cells.push_back({k + " number", o.number, kOffQuadric});
    t.cells.push_back({k + " sing", o.sing, kOffQuadric});
  }
  const char* nodes[6][4] = {{"D4", "A1", "A1", "D4"},   {"3E6", "3A5", "A1", "D4"}, {"3D4", "3A1", "3A1", "3D4"},
                             {"E6", "D4", "A3", "A5"},   {"2E7", "A7", "A3", "2D5"}, {"2E6", "A3", "A1", "2A5"}};
  for (int g = 0; g < 6; ++g)
    for (int f = 0; f < 4; ++f)
      t.cells.push_back({std::string(kAll[g]) + " lambda" + std::to_string(f + 1) + " nodes", nodes[g][f], kNodes});
  return t;
}

ExpectedTable nu() {
  ExpectedTable t{"nu", "Numbers of rational curves", {}};
  const char* smooth[4][6] = {{"4", "2", "6", "3", "2", "4"},
                              {"12", "-", "-", "9", "2", "4"},
                              {"3", "15", "9", "7", "14", "10"},
                              {"19", "17", "15", "19", "18", "18"}};
  const char* names[4] = {"nu1", "nu2", "nu3", "nu"};
  for (int g = 0; g < 6; ++g)
    for (int r = 0; r < 4; ++r) t.cells.push_back({std::string(kAll[g]) + " smooth " + names[r], smooth[r][g], kNuSmooth});
  const char* nu3[6][4] = {{"-", "3", "3", "-"}, {"-", "3", "15", "12"}, {"-", "9", "9", "-"},
                           {"2", "4", "5", "3"}, {"-", "8", "12", "6"},  {"-", "8", "10", "2"}};
  const char* nu4[6][4] = {{"4", "1", "1", "4"},  {"18", "15", "1", "4"}, {"12", "3", "3", "12"},
                           {"6", "4", "3", "5"},  {"16", "7", "3", "10"}, {"12", "3", "1", "10"}};
  const char* tot[6][4] = {{"20", "20", "20", "20"}, {"20", "20", "18", "18"}, {"18", "18", "18", "18"},
                           {"20", "20", "20", "20"}, {"20", "19", "19", "20"}, {"20", "19", "19", "20"}};
  for (int g = 0; g < 6; ++g)
    for (int f = 0; f < 4; ++f) {
      std::string k = std::string(kAll[g]) + " lambda" + std::to_string(f + 1);
      const bool oo_l1 = g == 4 && f == 0;
      t.cells.push_back({k + " nu3", nu3[g][f], kNuSingular, oo_l1 ? "2" : ""});
      t.cells.push_back({k + " nu4", nu4[g][f], kNuSingular, oo_l1 ? "14" : ""});
      t.cells.push_back({k + " nu", tot[g][f], kNuSingular});
    }
  return t;
}

ExpectedTable classes() {
  ExpectedTable t{"classes", "Divisible classes", {}};
  for (const auto& c : divisible_cases()) {
    t.cells.push_back({c.label + " divisible", "yes", kClasses});
    t.cells.push_back({c.label + " curve count", "yes", kClasses});
  }
  return t;
}

ExpectedTable discs() {
  ExpectedTable t{"discs", "Discriminant index identities", {}};
  for (const auto& c : index_cases()) t.cells.push_back({c.label, "holds", kDiscs});
  return t;
}

ExpectedTable ade() {
  ExpectedTable t{"ade", "Root lattice discriminants", {}};
  auto det = [](int rank, int abs) {
    return (rank % 2 ? "-" : "") + std::to_string(abs);
  };
  for (int n = 1; n <= 8; ++n) t.cells.push_back({"A" + std::to_string(n), det(n, n + 1), kAdeDet});
  for (int n = 4; n <= 8; ++n) t.cells.push_back({"D" + std::to_string(n), det(n, 4), kAdeDet});
  t.cells.push_back({"E6", det(6, 3), kAdeDet});
  t.cells.push_back({"E7", det(7, 2), kAdeDet});
  t.cells.push_back({"E8", det(8, 1), kAdeDet});
  // Component discriminants and the A-D-E sums that realise them.
  struct Comp {
    const char* key;
    const char* d;
  };
  for (Comp c : {Comp{"T_L d(M) = 3A1", "-2^3"}, Comp{"T_M d(M) = 3A1", "-2^3"}, Comp{"T_M d(N) = 6A2", "3^6"},
                 Comp{"O_L d(M) = 2A1", "2^2"}, Comp{"O_L d(N) = 2A2", "3^2"}, Comp{"O_L d(R) = A1", "-2"},
                 Comp{"O_M d(M) = 4A1", "2^4"}, Comp{"O_M d(N) = 2A2", "3^2"}, Comp{"O_M d(R) = 4A1", "2^4"},
                 Comp{"T_L-bar' d(M) = 9A1", "-2^9"}, Comp{"O_L-bar' d(M) = 2A1", "2^2"},
                 Comp{"O_L-bar' d(N) = 4A2", "3^4"}})
    t.cells.push_back({c.key, c.d, kComponents});
  return t;
}

// p = 2: disjoint (-2)-curves. p = 3: consecutive terms form A_2 pairs.
std::string support_config(const std::string& terms, int p) {
  std::istringstream in(terms);
  std::vector<std::string> names;
  for (std::string w; in >> w;) {
    std::size_t k = 0;
    while (k < w.size() && (w[k] == '+' || w[k] == '-')) ++k;
    names.push_back(w.substr(k));
  }
  std::string out;
  for (const auto& n : names) out += "curve " + n + "\n";
  if (p == 3)
    for (std::size_t k = 0; k + 1 < names.size(); k += 2) out += "edge " + names[k] + " " + names[k + 1] + "\n";
  return out + "class v = " + terms + "\n";
}

}  // namespace

const std::vector<DivisibleCase>& divisible_cases() {
  static const std::vector<DivisibleCase> cases = [] {
    std::vector<DivisibleCase> c;
    auto add = [&](const std::string& label, int p, const std::string& terms) {
      c.push_back({label, p, support_config(terms, p)});
    };
    add("Y_TxT: L", 3, "+L1 -L2 +L4 -L5 +N1 -N2 +N3 -N4 +N5 -N6 +N7 -N8");
    add("Y_TxT: L'", 3, "+L1' -L2' +L4' -L5' +N1 -N2 +N3 -N4 -N5 +N6 -N7 +N8");
    add("Y_TxT: M", 3, "+L1 -L2 +L4 -L5 -L1' +L2' -L4' +L5' -N5 +N6 -N7 +N8");
    add("Y_TxT: M'", 3, "+L1 -L2 +L4 -L5 +L1' -L2' +L4' -L5' -N1 +N2 -N3 +N4");
    add("Y_OxO: L", 2, "+L1 +L3 +L5 +M1 +M3 +M4 +R1 +R3");
    add("Y_OxO: L'", 2, "+L1' +L3' +L5' +M2 +M3 +M4 +R1 +R3");
    add("Y_OxO: M", 2, "+L1 +L3 +L5 +L1' +L3' +L5' +M1 +M2");
    add("T_L: L-bar'", 3, "+L1 -L2 +L4 -L5 +L1' -L2' +L4' -L5' +L1'' -L2'' +L4'' -L5''");
    add("T_L: h1", 2, "+L1 +L3 +L5 +L1' +L3' +L5' +M1 +M2");
    add("T_L: h2", 2, "+L1 +L3 +L5 +L1'' +L3'' +L5'' +M1 +M3");
    add("O_L: L-bar'", 2, "+L1 +L3 +L5 +L1' +L3' +L5' +M1 +M2");
    add("O_L: k1", 3, "+L1 -L2 +L4 -L5 -L1' +L2' -L4' +L5' +N1 -N2 +N3 -N4");
    add("O_L(8,4): extra 2-class", 2, "+L1 +L3 +L5 +N1 +C +N4 +R2 +M1");
    add("T_M: L-bar", 3, "+N1 -N2 +N3 -N4 +N5 -N6 +N7 -N8 +N9 -N10 +N11 -N12");
    add("T_M(6,2): first 2-class", 2, "+N1 +C1 +N4 +N5 +C2 +N8 +M1 +M2");
    add("T_M(6,2): second 2-class", 2, "+N1 +C1 +N4 +N9 +C3 +N12 +M1 +M3");
    add("O_M: L-bar", 2, "+M1 +M2 +M3 +M4 +R1 +R3 +R1' +R3'");
    c.push_back({"O_M(8,4): W", 4,
                 "# two A3 chains of R curves; per D5 block an A1 and an A3 chain\n"
                 "curve R1\ncurve R2\ncurve R3\ncurve R1'\ncurve R2'\ncurve R3'\n"
                 "curve N1\ncurve C1\ncurve M1\ncurve M2\ncurve N3\ncurve C2\ncurve M3\ncurve M4\n"
                 "edge R1 R2\nedge R2 R3\nedge R1' R2'\nedge R2' R3'\n"
                 "edge M1 C1\nedge C1 M2\nedge M3 C2\nedge C2 M4\n"
                 "class v = +R1 +2*R2 +3*R3 +R1' +2*R2' +3*R3' +2*N1 +2*C1 +3*M1 +M2 +2*N3 +2*C2 +3*M3 +M4\n"});
    add("O_L-bar': k1'", 3, "+L2 -L4 +L3' -L1' +N1 -N2 +N3 -N4 +N5 -N6 +N7 -N8");
    add("O_L-bar': k1''", 3, "+L2' -L4' +L3 -L1 +N1 -N2 -N3 +N4 +N5 -N6 -N7 +N8");
    add("O_L-bar'(8,4): kappa", 2, "+N1 +C1 +N4 +N5 +C2 +N8 +M1 +M2");
    return c;
  }();
  return cases;
}

const std::vector<IndexCase>& index_cases() {
  static const std::vector<IndexCase> cases = {
      {"T_L smooth", "2^5*3^3*5", "2*3*5", {3, 2, 2}},
      {"O_L smooth", "2^5*3^3*7", "2^3*3*7", {2, 3}},
      {"T_L(6,1)", "-2^4*3^3*5", "-3*5", {3, 2, 2}},
      {"T_L(6,2)", "-2^6*3^3*5", "-2^2*3*5", {3, 2, 2}},
      {"T_M(6,1)", "-3^3*5", "-3*5", {3}},
      {"T_M(6,2)", "-2^6*3^3*5", "-2^2*3*5", {3, 2, 2}},
      {"O_L(8,1)", "-2^4*3^2*7", "-2^2*7", {2, 3}},
      {"O_L(8,4)", "-2^6*3^2*7", "-2^2*7", {2, 3, 2}},
      {"O_M(8,1)", "-2^4*7", "-2^2*7", {2}},
      {"O_M(8,4)", "-2^8*7", "-2^4*7", {4}},
      {"O_L-bar'(8,1)", "-3^4*7", "-7", {3, 3}},
      {"O_L-bar'(8,4)", "-2^4*3^4*7", "-2^2*7", {3, 3, 2}},
  };
  return cases;
}

lattices::BigInt parse_factored(std::string_view text) {
  auto bad = [&] { return DomainError("bad factored integer '" + std::string(text) + "'"); };
  std::string_view s = text;
  int sign = 1;
  if (!s.empty() && s.front() == '-') {
    sign = -1;
    s.remove_prefix(1);
  }
  if (s.empty()) throw bad();
  lattices::BigInt out = 1;
  while (!s.empty()) {
    std::size_t end = s.find('*');
    std::string_view f = s.substr(0, end);
    s = end == std::string_view::npos ? std::string_view() : s.substr(end + 1);
    if (end != std::string_view::npos && s.empty()) throw bad();
    std::size_t caret = f.find('^');
    auto num = [&](std::string_view d) {
      if (d.empty() || d.size() > 9) throw bad();
      long v = 0;
      for (char c : d) {
        if (c < '0' || c > '9') throw bad();
        v = v * 10 + (c - '0');
      }
      return v;
    };
    long base = num(f.substr(0, caret));
    long exp = caret == std::string_view::npos ? 1 : num(f.substr(caret + 1));
    for (long k = 0; k < exp; ++k) out *= base;
  }
  return sign * out;
}

const std::vector<ExpectedTable>& expected_tables() {
  static const std::vector<ExpectedTable> tables = {subgroups(), rulings(), meeting(), fixlines(), sing(),
                                                    nu(),        classes(), discs(),   ade()};
  return tables;
}

const ExpectedTable& expected_table(std::string_view id) {
  for (const auto& t : expected_tables())
    if (t.id == id) return t;
  throw DomainError("unknown table " + std::string(id));
}

}  // namespace k3q::tables
