#pragma once

// Monomial ideals: minimal generators, products, powers, intersections,
// saturation by the irrelevant ideal, symbolic powers and initial degree.

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waldcone/errors.hpp"
#include "waldcone/rational.hpp"

namespace waldcone {

using Monomial = std::vector<int>;

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline int total_degree(const Monomial& a) {
  int s = 0;
  for (int e : a) s += e;
  return s;
}

class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens) : vars_(std::move(vars)) {
    for (auto& g : gens) {
      if (g.size() != vars_.size()) throw DimensionError("monomial has " + std::to_string(g.size()) + " exponents for " + std::to_string(vars_.size()) + " variables");
      for (int e : g) {
        if (e < 0) throw ArgumentError("negative exponent in a monomial");
      }
    }
    gens_ = minimal(std::move(gens));
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t nvars() const { return vars_.size(); }
  bool is_zero() const { return gens_.empty(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  // Drops generators divisible by another; sorted lexicographically descending.
  static std::vector<Monomial> minimal(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
        if (a != b && divides(gens[b], gens[a])) redundant = true;
      }
      if (!redundant) keep.push_back(gens[a]);
    }
    std::sort(keep.begin(), keep.end(), std::greater<>());
    return keep;
  }

  std::vector<std::string> vars_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::vector<std::string> vars, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(vars), std::move(gens));
}

namespace detail {
inline void same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.variables() != J.variables()) throw DimensionError("monomial ideals live in different rings");
}
}  // namespace detail

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::same_ring(I, J);
  std::vector<Monomial> out;
  for (const auto& a : I.generators()) {
    for (const auto& b : J.generators()) {
      Monomial c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
      out.push_back(std::move(c));
    }
  }
  return MonomialIdeal(I.variables(), std::move(out));
}

inline MonomialIdeal power(const MonomialIdeal& I, int m) {
  if (m < 1) throw ArgumentError("ideal power needs m >= 1");
  MonomialIdeal P = I;
  for (int k = 1; k < m; ++k) P = product(P, I);
  return P;
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::same_ring(I, J);
  std::vector<Monomial> out;
  for (const auto& a : I.generators()) {
    for (const auto& b : J.generators()) {
      Monomial c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
      out.push_back(std::move(c));
    }
  }
  return MonomialIdeal(I.variables(), std::move(out));
}

inline bool contains(const MonomialIdeal& I, const Monomial& mono) {
  if (mono.size() != I.nvars()) throw DimensionError("monomial and ideal have different variable counts");
  return std::any_of(I.generators().begin(), I.generators().end(), [&](const Monomial& g) { return divides(g, mono); });
}

/// I : v^infinity, by deleting the v-exponent from every generator.
inline MonomialIdeal colon_power_infinity(const MonomialIdeal& I, std::size_t v) {
  std::vector<Monomial> out = I.generators();
  for (auto& g : out) g.at(v) = 0;
  return MonomialIdeal(I.variables(), std::move(out));
}

/// I : m^infinity for m the ideal of all variables.
inline MonomialIdeal saturate_irrelevant(const MonomialIdeal& I) {
  if (I.nvars() == 0 || I.is_zero()) return I;
  MonomialIdeal S = colon_power_infinity(I, 0);
  for (std::size_t v = 1; v < I.nvars(); ++v) S = intersect(S, colon_power_infinity(I, v));
  return S;
}

/// (I^m)^sat, which is the symbolic power for ideals of zero-dimensional schemes.
inline MonomialIdeal symbolic_power(const MonomialIdeal& I, int m) {
  if (m < 1) throw ArgumentError("symbolic power needs m >= 1");
  return saturate_irrelevant(power(I, m));
}

inline int alpha(const MonomialIdeal& I) {
  if (I.is_zero()) throw ArgumentError("initial degree of the zero ideal");
  int best = total_degree(I.generators().front());
  for (const auto& g : I.generators()) best = std::min(best, total_degree(g));
  return best;
}

/// min over 1 <= m <= M of alpha(I^(m)) / m: an upper bound for the Waldschmidt constant.
inline Rational waldschmidt_estimate(const MonomialIdeal& I, int M) {
  if (M < 1) throw ArgumentError("estimate needs M >= 1");
  if (I.is_zero()) throw ArgumentError("initial degree of the zero ideal");
  Rational best(alpha(symbolic_power(I, 1)));
  MonomialIdeal P = I;
  for (int m = 2; m <= M; ++m) {
    P = product(P, I);
    best = std::min(best, Rational(alpha(saturate_irrelevant(P)), m));
  }
  return best;
}

// Text form: "x^2, x*y, y^3", optionally prefixed by a ring header "k[x,y,z]:".
// Without a header or explicit variables the ring is k[x,y,z] extended by any
// other variables in order of first use.

namespace detail {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto p = s.find(sep);
    out.push_back(strip(s.substr(0, p)));
    if (p == std::string_view::npos) break;
    s.remove_prefix(p + 1);
  }
  return out;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace detail

inline std::vector<std::string> parse_variables(std::string_view text) {
  std::vector<std::string> vars;
  for (auto v : detail::split(text, ',')) {
    if (!detail::is_identifier(v)) throw ParseError("bad variable name '" + std::string(v) + "'");
    if (std::find(vars.begin(), vars.end(), v) != vars.end()) throw ParseError("repeated variable '" + std::string(v) + "'");
    vars.emplace_back(v);
  }
  return vars;
}

inline MonomialIdeal parse_ideal(std::string_view text, std::optional<std::vector<std::string>> vars = std::nullopt) {
  std::string_view body = detail::strip(text);
  bool fixed = vars.has_value();
  if (body.size() >= 2 && body[0] == 'k' && body[1] == '[') {
    auto close = body.find(']');
    if (close == std::string_view::npos) throw ParseError("unterminated ring header");
    auto header = parse_variables(body.substr(2, close - 2));
    if (vars && *vars != header) throw ParseError("ring header disagrees with the given variables");
    vars = header;
    fixed = true;
    body = detail::strip(body.substr(close + 1));
    if (body.empty() || body[0] != ':') throw ParseError("expected ':' after the ring header");
    body = detail::strip(body.substr(1));
  }
  std::vector<std::string> names = vars ? *vars : std::vector<std::string>{"x", "y", "z"};

  std::vector<std::vector<std::pair<std::size_t, int>>> terms;
  if (body != "0") {
    for (auto term : detail::split(body, ',')) {
      if (term.empty()) throw ParseError("empty generator in '" + std::string(text) + "'");
      std::vector<std::pair<std::size_t, int>> factors;
      if (term != "1") {
        for (auto f : detail::split(term, '*')) {
          std::string_view name = f;
          int e = 1;
          if (auto caret = f.find('^'); caret != std::string_view::npos) {
            name = detail::strip(f.substr(0, caret));
            auto ex = detail::strip(f.substr(caret + 1));
            if (ex.empty() || ex.size() > 6 || !std::all_of(ex.begin(), ex.end(), [](char c) { return c >= '0' && c <= '9'; })) {
              throw ParseError("bad exponent in '" + std::string(term) + "'");
            }
            e = std::stoi(std::string(ex));
          }
          if (!detail::is_identifier(name)) throw ParseError("bad factor '" + std::string(f) + "'");
          auto it = std::find(names.begin(), names.end(), name);
          if (it == names.end()) {
            if (fixed) throw ParseError("unknown variable '" + std::string(name) + "'");
            names.emplace_back(name);
            it = names.end() - 1;
          }
          factors.emplace_back(static_cast<std::size_t>(it - names.begin()), e);
        }
      }
      terms.push_back(std::move(factors));
    }
  }
  std::vector<Monomial> gens;
  for (const auto& t : terms) {
    Monomial m(names.size(), 0);
    for (auto [v, e] : t) m[v] += e;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(std::move(names), std::move(gens));
}

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// "x^4, x^3*y, ..."; the zero ideal prints as "0".
inline std::string format_ideal(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string s;
  for (const auto& g : I.generators()) {
    if (!s.empty()) s += ", ";
    s += format_monomial(g, I.variables());
  }
  return s;
}

inline Monomial parse_monomial(std::string_view text, const std::vector<std::string>& vars) {
  auto I = parse_ideal(text, vars);
  if (I.generators().size() != 1) throw ParseError("expected a single monomial, got '" + std::string(text) + "'");
  return I.generators().front();
}

}  // namespace waldcone
