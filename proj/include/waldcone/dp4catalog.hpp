#pragma once

// The weak del Pezzo surfaces of degree 4 obtained by blowing up five
// essentially distinct points: configurations of (-2)-curves and (-1)-curves.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "waldcone/classes.hpp"
#include "waldcone/cone.hpp"
#include "waldcone/config.hpp"
#include "waldcone/errors.hpp"
#include "waldcone/lattice.hpp"

namespace waldcone {

struct Dp4Type {
  int n = 0;            // points on the plane itself
  std::string sigma;    // Dynkin type of the (-2)-curves, "∅" when there are none
  int l = 0;            // number of (-1)-curves
  std::string variant;  // "", "a" or "b"
  std::vector<DivisorClass> roots;
  std::vector<DivisorClass> lines;
  std::vector<std::pair<DivisorClass, DivisorClass>> edges;
  Rational expected_alpha_hat;

  std::string label() const {
    std::string s = "(" + std::to_string(n) + "," + sigma + "," + std::to_string(l) + ")";
    if (!variant.empty()) s += "(" + variant + ")";
    return s;
  }

  SurfaceConfig config() const {
    SurfaceConfig cfg{5, std::nullopt, roots};
    cfg.neg_curves.insert(cfg.neg_curves.end(), lines.begin(), lines.end());
    return cfg;
  }
};

struct DegenerationEdge {
  std::string general;
  std::string special;
  bool flagged = false;  // source text names a type that does not exist; reported only
};

/// Sum of the ranks of the Dynkin symbols in e.g. "2A1A3" or "D5"; 0 for "∅".
inline int dynkin_rank(std::string_view sigma) {
  if (sigma == "∅") return 0;
  int total = 0;
  std::size_t i = 0;
  while (i < sigma.size()) {
    int mult = 0;
    while (i < sigma.size() && sigma[i] >= '0' && sigma[i] <= '9') mult = mult * 10 + (sigma[i++] - '0');
    if (mult == 0) mult = 1;
    if (i >= sigma.size() || (sigma[i] != 'A' && sigma[i] != 'D' && sigma[i] != 'E')) {
      throw ParseError("malformed Dynkin type '" + std::string(sigma) + "'");
    }
    ++i;
    int rk = 0;
    if (i >= sigma.size() || sigma[i] < '0' || sigma[i] > '9') throw ParseError("malformed Dynkin type '" + std::string(sigma) + "'");
    // Single-digit ranks: "A1A3" is A1 + A3.
    rk = sigma[i++] - '0';
    total += mult * rk;
  }
  return total;
}

namespace detail {

struct RawType {
  int n;
  const char* sigma;
  int l;
  const char* variant;
  std::vector<const char*> roots;
  std::vector<const char*> lines;
  std::vector<std::pair<const char*, const char*>> edges;
};

// Short names: E12 = e1 - e2, E5 = e5, L123 = e0 - e1 - e2 - e3, Q = 2e0 - e1 - ... - e5.
inline DivisorClass short_class(std::string_view s) {
  if (s == "Q") return parse_class("Q_12345", 5);
  return parse_class(std::string(1, s[0]) + "_" + std::string(s.substr(1)), 5);
}

inline const std::vector<RawType>& raw_catalog() {
  static const std::vector<RawType> data = {
      {1, "D5", 1, "",
       {"E12", "E23", "E34", "E45", "L123"},
       {"E5"},
       {{"E12", "E23"}, {"E23", "E34"}, {"E34", "E45"}, {"E45", "E5"}, {"E34", "L123"}}},
      {1, "A4", 3, "",
       {"E12", "E23", "E34", "E45"},
       {"E5", "Q", "L12"},
       {{"E12", "E23"}, {"E23", "E34"}, {"E34", "E45"}, {"E45", "E5"}, {"E5", "Q"}, {"E23", "L12"}}},
      {2, "2A1A3", 2, "",
       {"E45", "L145", "E12", "E23", "L123"},
       {"E5", "E3"},
       {{"E45", "E5"}, {"E5", "L145"}, {"L145", "E12"}, {"E12", "E23"}, {"E23", "E3"}, {"E3", "L123"}}},
      {2, "D4", 2, "",
       {"L123", "E34", "E45", "E23"},
       {"E1", "E5"},
       {{"E1", "L123"}, {"L123", "E34"}, {"E34", "E45"}, {"E45", "E5"}, {"E34", "E23"}}},
      {2, "A4", 3, "a",
       {"E12", "E23", "L124", "E45"},
       {"E5", "L45", "E3"},
       {{"E12", "E23"}, {"E23", "L124"}, {"L124", "E45"}, {"E45", "E5"}, {"E5", "L45"}, {"E23", "E3"}}},
      {2, "A4", 3, "b",
       {"L134", "E45", "E34", "E13"},
       {"L12", "E2", "E5"},
       {{"L134", "E45"}, {"E45", "E34"}, {"E34", "E13"}, {"E13", "L12"}, {"L12", "E2"}, {"E45", "E5"}}},
      {2, "A1A3", 3, "",
       {"E23", "E12", "L145", "E45"},
       {"E3", "L12", "E5"},
       {{"L12", "E23"}, {"E23", "E12"}, {"E12", "L145"}, {"L145", "E5"}, {"E5", "E45"}, {"E23", "E3"}}},
      {2, "2A1A2", 4, "",
       {"E12", "E23", "L123", "E45"},
       {"E3", "L45", "E5", "L14"},
       {{"E12", "E23"}, {"E23", "E3"}, {"E3", "L123"}, {"L123", "L45"}, {"L45", "E5"}, {"E5", "E45"}, {"E45", "L14"}, {"E12", "L14"}}},
      {2, "A3", 5, "",
       {"E12", "E23", "E34"},
       {"E4", "Q", "E5", "L15", "L12"},
       {{"E12", "E23"}, {"E23", "E34"}, {"E34", "E4"}, {"E4", "Q"}, {"Q", "E5"}, {"E5", "L15"}, {"L15", "E12"}, {"E23", "L12"}}},
      {2, "A1A2", 6, "",
       {"E23", "E12", "E45"},
       {"L12", "L45", "E5", "Q", "E3", "L14"},
       {{"L12", "L45"}, {"L45", "E5"}, {"E5", "Q"}, {"Q", "E3"}, {"E3", "E23"}, {"E23", "E12"}, {"E12", "L14"}, {"L14", "E45"}, {"E23", "L12"}, {"E45", "E5"}}},
      {3, "A1A3", 3, "",
       {"L123", "E14", "E45", "L145"},
       {"E2", "E3", "E5"},
       {{"E3", "L123"}, {"L123", "E14"}, {"E14", "E45"}, {"E45", "E5"}, {"E5", "L145"}, {"L123", "E2"}}},
      {3, "2A1A2", 4, "",
       {"E45", "L124", "E12", "L345"},
       {"E2", "L13", "E3", "E5"},
       {{"E45", "L124"}, {"L124", "E2"}, {"E2", "E12"}, {"E12", "L13"}, {"L13", "E3"}, {"E3", "L345"}, {"L345", "E5"}, {"E45", "E5"}}},
      {3, "4A1", 4, "",
       {"E12", "E45", "L345", "L123"},
       {"E2", "L14", "E5", "E3"},
       {{"E2", "E12"}, {"E12", "L14"}, {"L14", "E45"}, {"E45", "E5"}, {"E5", "L345"}, {"L345", "E3"}, {"E3", "L123"}, {"E2", "L123"}}},
      {3, "A3", 4, "",
       {"L145", "E12", "E23"},
       {"E4", "E5", "E3", "L12"},
       {{"E5", "L145"}, {"L145", "E12"}, {"E12", "E23"}, {"E23", "E3"}, {"L145", "E4"}, {"E23", "L12"}}},
      {3, "A3", 5, "a",
       {"E14", "L123", "E25"},
       {"E5", "L25", "L14", "E4", "E3"},
       {{"E14", "L123"}, {"L123", "E25"}, {"E25", "E5"}, {"E5", "L25"}, {"L25", "L14"}, {"L14", "E4"}, {"E4", "E14"}, {"L123", "E3"}}},
      {3, "A3", 5, "b",
       {"E23", "E34", "L123"},
       {"E1", "L15", "E5", "L25", "E4"},
       {{"E23", "E34"}, {"E34", "L123"}, {"L123", "E1"}, {"E1", "L15"}, {"L15", "E5"}, {"E5", "L25"}, {"L25", "E23"}, {"E34", "E4"}}},
      {3, "A1A2", 6, "a",
       {"E34", "L123", "E12"},
       {"L35", "E5", "L15", "L34", "E4", "E2"},
       {{"L35", "E5"}, {"E5", "L15"}, {"L15", "L34"}, {"L34", "E4"}, {"E4", "E34"}, {"E34", "L123"}, {"L123", "E2"}, {"E2", "E12"}, {"E34", "L35"}, {"E12", "L15"}}},
      {3, "A1A2", 6, "b",
       {"E12", "E23", "L123"},
       {"L14", "E4", "L45", "E5", "L15", "E3"},
       {{"L14", "E4"}, {"E4", "L45"}, {"L45", "E5"}, {"E5", "L15"}, {"L15", "E12"}, {"E12", "E23"}, {"E23", "E3"}, {"E3", "L123"}, {"E12", "L14"}, {"L123", "L45"}}},
      {3, "3A1", 6, "",
       {"L345", "E12", "E34"},
       {"E2", "L12", "E5", "L15", "L13", "E4"},
       {{"E2", "L12"}, {"L12", "L345"}, {"L345", "E5"}, {"E5", "L15"}, {"L15", "E12"}, {"E12", "L13"}, {"L13", "E34"}, {"E34", "E4"}, {"E12", "E2"}, {"E4", "L345"}}},
      {3, "A2", 8, "",
       {"E23", "E12"},
       {"L15", "E5", "L45", "L12", "E3", "Q", "E4", "L14"},
       {{"L15", "E5"}, {"E5", "L45"}, {"L45", "L12"}, {"L12", "E23"}, {"E23", "E3"}, {"E3", "Q"}, {"Q", "E4"}, {"E4", "L14"}, {"L14", "E12"}, {"E12", "L15"}, {"E12", "E23"}, {"E5", "Q"}, {"L45", "E4"}}},
      {3, "2A1", 9, "",
       {"E34", "E12"},
       {"L15", "L34", "E4", "L35", "L12", "E2", "L13", "E5", "Q"},
       {{"L15", "L34"}, {"L34", "E4"}, {"E4", "E34"}, {"E34", "L35"}, {"L35", "L12"}, {"L12", "E2"}, {"E2", "E12"}, {"E5", "Q"}, {"E12", "L15"}, {"L34", "L12"}, {"E5", "L15"}, {"E5", "L35"}, {"Q", "E4"}, {"Q", "E2"}, {"E12", "L13"}, {"L13", "E34"}}},
      {4, "A1A2", 6, "",
       {"L123", "E14", "L145"},
       {"E2", "L25", "E5", "L35", "E3", "E4"},
       {{"E2", "L25"}, {"L25", "E5"}, {"E5", "L35"}, {"L35", "E3"}, {"E3", "L123"}, {"L123", "E14"}, {"E14", "E4"}, {"E4", "L145"}, {"L123", "E2"}, {"L145", "E5"}}},
      {4, "3A1", 6, "",
       {"E23", "L145", "L123"},
       {"E4", "L24", "L25", "E5", "E1", "E3"},
       {{"E4", "L24"}, {"L24", "E23"}, {"E23", "L25"}, {"L25", "E5"}, {"E5", "L145"}, {"L145", "E1"}, {"E1", "L123"}, {"L123", "E3"}, {"L145", "E4"}, {"E3", "E23"}}},
      {4, "A2", 8, "",
       {"L145", "E12"},
       {"L13", "E3", "L34", "E4", "E5", "L35", "L12", "E2"},
       {{"L13", "E3"}, {"E3", "L34"}, {"L34", "E4"}, {"E4", "L145"}, {"L145", "E5"}, {"E5", "L35"}, {"L35", "L12"}, {"L12", "E2"}, {"E2", "E12"}, {"E12", "L13"}, {"E12", "L145"}, {"E3", "L35"}, {"L34", "L12"}}},
      {4, "2A1", 8, "",
       {"E12", "L345"},
       {"L13", "E3", "E2", "L12", "L14", "E4", "L15", "E5"},
       {{"E12", "L13"}, {"L13", "E3"}, {"E3", "L345"}, {"E2", "L12"}, {"L14", "E4"}, {"L15", "E5"}, {"E12", "E2"}, {"E12", "L14"}, {"E12", "L15"}, {"L345", "L12"}, {"L345", "E4"}, {"L345", "E5"}}},
      {4, "2A1", 9, "",
       {"L123", "E12"},
       {"L14", "L35", "E3", "L45", "E5", "L15", "E2", "E4", "L34"},
       {{"L14", "L35"}, {"L35", "E3"}, {"E3", "L123"}, {"L123", "L45"}, {"L45", "E5"}, {"E5", "L15"}, {"L15", "E12"}, {"E12", "L14"}, {"L35", "E5"}, {"E4", "L14"}, {"E4", "L45"}, {"L34", "E3"}, {"L34", "L15"}, {"E12", "E2"}, {"E2", "L123"}, {"E4", "L34"}}},
      {4, "A1", 12, "",
       {"E12"},
       {"E2", "L12", "L34", "E3", "L13", "L15", "E5", "L35", "L14", "E4", "L45", "Q"},
       {{"E12", "E2"}, {"E2", "L12"}, {"L12", "L34"}, {"L34", "E3"}, {"E3", "L13"}, {"E12", "L13"}, {"E12", "L15"}, {"L15", "E5"}, {"E5", "L35"}, {"E4", "L45"}, {"E12", "L14"}, {"L14", "E4"}, {"E4", "Q"}, {"L34", "E4"}, {"L34", "L15"}, {"L35", "E3"}, {"L35", "L12"}, {"L35", "L14"}, {"Q", "E3"}, {"Q", "E5"}, {"Q", "E2"}, {"L45", "L12"}, {"L45", "E5"}, {"L45", "L13"}}},
      {5, "2A1", 9, "",
       {"L145", "L123"},
       {"E2", "L24", "E4", "E5", "L35", "E3", "E1", "L25", "L34"},
       {{"E2", "L24"}, {"L24", "E4"}, {"E4", "L145"}, {"L145", "E5"}, {"E5", "L35"}, {"L35", "E3"}, {"E3", "L123"}, {"L123", "E2"}, {"L24", "L35"}, {"L25", "E2"}, {"L25", "E5"}, {"L34", "E4"}, {"L34", "E3"}, {"L123", "E1"}, {"E1", "L145"}, {"L25", "L34"}}},
      {5, "A1", 12, "",
       {"L145"},
       {"E4", "L34", "L25", "L13", "E1", "E5", "L35", "E3", "L23", "E2", "L12", "L24"},
       {{"L145", "E4"}, {"E4", "L34"}, {"L34", "L25"}, {"L25", "L13"}, {"L13", "E1"}, {"L145", "E1"}, {"L145", "E5"}, {"E5", "L35"}, {"L35", "E3"}, {"E3", "L34"}, {"L23", "L145"}, {"E2", "L12"}, {"L12", "L35"}, {"L24", "L13"}, {"L23", "E2"}, {"E2", "L24"}, {"L25", "E2"}, {"L25", "E5"}, {"E3", "L13"}, {"E3", "L23"}, {"L24", "L35"}, {"L24", "E4"}, {"L12", "L34"}, {"L12", "E1"}}},
  };
  return data;
}

inline Rational expected_value(const std::string& label) {
  if (label == "(1,D5,1)" || label == "(2,2A1A3,2)") return Rational(5, 3);
  if (label == "(2,A4,3)(a)") return Rational(7, 4);
  if (label == "(3,2A1A2,4)") return Rational(9, 5);
  return Rational(2);
}

}  // namespace detail

inline const std::vector<Dp4Type>& catalog() {
  static const std::vector<Dp4Type> types = [] {
    std::vector<Dp4Type> out;
    for (const auto& raw : detail::raw_catalog()) {
      Dp4Type t;
      t.n = raw.n;
      t.sigma = raw.sigma;
      t.l = raw.l;
      t.variant = raw.variant;
      for (auto s : raw.roots) t.roots.push_back(detail::short_class(s));
      for (auto s : raw.lines) t.lines.push_back(detail::short_class(s));
      for (auto [a, b] : raw.edges) t.edges.emplace_back(detail::short_class(a), detail::short_class(b));
      t.expected_alpha_hat = detail::expected_value(t.label());
      out.push_back(std::move(t));
    }
    // Generic type: no (-2)-curves, all sixteen (-1)-classes are lines.
    Dp4Type g;
    g.n = 5;
    g.sigma = "∅";
    g.l = 16;
    g.lines = enumerate_exceptional(5);
    for (std::size_t a = 0; a < g.lines.size(); ++a) {
      for (std::size_t b = a + 1; b < g.lines.size(); ++b) {
        if (pairing(g.lines[a], g.lines[b]) == 1) g.edges.emplace_back(g.lines[a], g.lines[b]);
      }
    }
    g.expected_alpha_hat = 2;
    out.push_back(std::move(g));
    return out;
  }();
  return types;
}

/// Accepts the canonical label, plus "0" or "-" in place of "∅".
inline const Dp4Type& find_type(std::string_view label) {
  std::string s;
  for (char ch : label) {
    if (ch != ' ') s += ch;
  }
  for (const char* alias : {",0,", ",-,"}) {
    if (auto pos = s.find(alias); pos != std::string::npos) s.replace(pos, 3, ",∅,");
  }
  for (const auto& t : catalog()) {
    if (t.label() == s) return t;
  }
  throw ArgumentError("unknown catalog type '" + std::string(label) + "'");
}

/// General -> special, per the one-parameter degenerations moving the last point.
inline const std::vector<DegenerationEdge>& degeneration_edges() {
  static const std::vector<DegenerationEdge> edges = {
      {"(2,A3,5)", "(1,A4,3)"},
      {"(2,A1A2,6)", "(2,A1A3,3)"},
      {"(3,A3,4)", "(2,A1A3,3)"},
      {"(3,A3,5)(b)", "(2,D4,2)"},
      {"(3,A1A2,6)(a)", "(2,A1A3,3)"},
      {"(3,A1A2,6)(b)", "(2,2A1A2,4)"},
      {"(3,3A1,6)", "(2,2A1A2,4)"},
      {"(3,A2,8)", "(2,A1A2,6)"},
      {"(3,2A1,9)", "(2,A1A2,6)"},
      {"(4,A1A2,6)", "(3,A1A3,3)"},
      {"(4,3A1,6)", "(3,4A1,4)"},
      {"(4,A2,8)", "(3,A1A2,6)(a)"},
      {"(4,A2,8)", "(3,A1A2,6)(b)"},
      {"(4,2A1,8)", "(3,3A1,6)"},
      {"(4,2A1,9)", "(3,3A1,6)"},
      {"(4,A1,12)", "(3,2A1,9)"},
      {"(5,2A1,9)", "(4,3A1,6)"},
      {"(5,A1,12)", "(4,2A1,9)", true},
  };
  return edges;
}

struct TableRow {
  std::string label;
  Rational alpha_hat;
  Rational expected;
  Certificate certificate;
  bool verified = false;
  bool matches = false;
};

inline std::vector<TableRow> compute_table() {
  std::vector<TableRow> rows;
  for (const auto& t : catalog()) {
    auto cfg = t.config();
    auto wr = waldschmidt(cfg, ones(5));
    TableRow row{t.label(), wr.value, t.expected_alpha_hat, *wr.certificate, false, false};
    row.verified = verify_certificate(row.certificate, cfg);
    row.matches = row.alpha_hat == row.expected;
    rows.push_back(std::move(row));
  }
  return rows;
}

struct DegenerationCheck {
  DegenerationEdge edge;
  Rational general_value;
  Rational special_value;
  bool passes = false;
};

inline std::vector<DegenerationCheck> check_degenerations(const std::vector<TableRow>& table) {
  auto value = [&](const std::string& label) {
    for (const auto& row : table) {
      if (row.label == label) return row.alpha_hat;
    }
    throw ArgumentError("degeneration edge names unknown type " + label);
  };
  std::vector<DegenerationCheck> out;
  for (const auto& e : degeneration_edges()) {
    DegenerationCheck c{e, value(e.general), value(e.special), false};
    c.passes = c.special_value <= c.general_value;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<DegenerationCheck> check_degenerations() { return check_degenerations(compute_table()); }

struct BoundsReport {
  Rational lower{5, 3};
  Rational upper{2};
  std::vector<std::pair<std::string, Rational>> out_of_range;
  std::set<Rational> values;

  bool in_range() const { return out_of_range.empty(); }
  bool value_set_matches() const {
    return values == std::set<Rational>{Rational(5, 3), Rational(7, 4), Rational(9, 5), Rational(2)};
  }
  bool passes() const { return in_range() && value_set_matches(); }
};

/// r/3 <= alpha_hat <= 2 with r = 5, the upper value coming from the generic type.
inline BoundsReport check_bounds(const std::vector<TableRow>& table) {
  BoundsReport rep;
  for (const auto& row : table) {
    rep.values.insert(row.alpha_hat);
    if (row.alpha_hat < rep.lower || row.alpha_hat > rep.upper) rep.out_of_range.emplace_back(row.label, row.alpha_hat);
  }
  return rep;
}

inline BoundsReport check_bounds() { return check_bounds(compute_table()); }

}  // namespace waldcone
