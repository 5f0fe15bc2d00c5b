#pragma once

// Surface configurations: proximity among essentially distinct points, NEG(X),
// validation and effective-cone generators.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waldcone/classes.hpp"
#include "waldcone/errors.hpp"
#include "waldcone/lattice.hpp"

namespace waldcone {

/// prox(j, i) == true means p_j lies on the strict transform of E_i. Indices are 1-based.
class ProximityMatrix {
 public:
  explicit ProximityMatrix(int r = 0) : r_(r), bits_(static_cast<std::size_t>(r * r), false) { require_rank(r); }

  /// From a list of (j, i) pairs: p_j proximate to p_i.
  ProximityMatrix(int r, const std::vector<std::pair<int, int>>& pairs) : ProximityMatrix(r) {
    for (auto [j, i] : pairs) set(j, i);
  }

  int rank() const { return r_; }

  bool operator()(int j, int i) const { return bits_[index(j, i)]; }

  void set(int j, int i, bool value = true) { bits_[index(j, i)] = value; }

  /// Points proximate to p_i.
  std::vector<int> proximate_to(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= r_; ++j) {
      if ((*this)(j, i)) out.push_back(j);
    }
    return out;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= r_; ++j) {
      for (int i = 1; i <= r_; ++i) {
        if ((*this)(j, i)) out.emplace_back(j, i);
      }
    }
    return out;
  }

  friend bool operator==(const ProximityMatrix&, const ProximityMatrix&) = default;

 private:
  std::size_t index(int j, int i) const {
    if (j < 1 || j > r_ || i < 1 || i > r_) {
      throw ArgumentError("proximity index (" + std::to_string(j) + "," + std::to_string(i) + ") outside 1.." + std::to_string(r_));
    }
    return static_cast<std::size_t>((j - 1) * r_ + (i - 1));
  }

  int r_;
  std::vector<bool> bits_;
};

struct SurfaceConfig {
  int r = 0;
  std::optional<ProximityMatrix> proximity;
  std::vector<DivisorClass> neg_curves;
};

using Multiplicities = std::vector<Integer>;

inline Multiplicities ones(int r) { return Multiplicities(static_cast<std::size_t>(r), Integer(1)); }

inline void check_multiplicities(const Multiplicities& m, int r) {
  if (static_cast<int>(m.size()) != r) {
    throw DimensionError("expected " + std::to_string(r) + " multiplicities, got " + std::to_string(m.size()));
  }
  for (const auto& x : m) {
    if (x < 0) throw ArgumentError("multiplicities must be nonnegative");
  }
}

struct ValidationIssue {
  std::string message;
  std::optional<DivisorClass> offending;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool valid() const { return errors.empty(); }

  std::string summary() const {
    std::string s;
    for (const auto& e : errors) s += (s.empty() ? "" : "; ") + e.message;
    return s;
  }
};

inline ValidationReport validate_config(const SurfaceConfig& cfg) {
  ValidationReport rep;
  auto error = [&](std::string msg, std::optional<DivisorClass> c = std::nullopt) {
    rep.errors.push_back({std::move(msg), std::move(c)});
  };
  if (cfg.r < 0 || cfg.r > kMaxRank) {
    error("unsupported rank r=" + std::to_string(cfg.r));
    return rep;
  }

  std::vector<DivisorClass> universe;
  if (cfg.r >= 2) universe = candidate_union(cfg.r);

  std::vector<const DivisorClass*> ok;
  for (const auto& c : cfg.neg_curves) {
    if (c.rank() != cfg.r) {
      error("class " + format_class(c) + " has rank " + std::to_string(c.rank()) + ", expected " + std::to_string(cfg.r), c);
      continue;
    }
    if (self_pairing(c) >= 0) {
      error("class " + format_class(c) + " has nonnegative square " + self_pairing(c).str(), c);
    } else if (cfg.r >= 2 && !std::binary_search(universe.begin(), universe.end(), c)) {
      error("class " + format_class(c) + " is not a candidate negative class", c);
    }
    ok.push_back(&c);
  }
  for (std::size_t a = 0; a < ok.size(); ++a) {
    for (std::size_t b = a + 1; b < ok.size(); ++b) {
      if (*ok[a] == *ok[b]) {
        error("duplicate class " + format_class(*ok[a]), *ok[a]);
      } else if (auto p = pairing(*ok[a], *ok[b]); p < 0) {
        error("classes " + format_class(*ok[a]) + " and " + format_class(*ok[b]) + " pair to " + p.str() + " < 0", *ok[b]);
      }
    }
  }

  if (cfg.proximity) {
    const auto& P = *cfg.proximity;
    if (P.rank() != cfg.r) {
      error("proximity matrix has rank " + std::to_string(P.rank()) + ", expected " + std::to_string(cfg.r));
    } else {
      for (int j = 1; j <= cfg.r; ++j) {
        int count = 0;
        for (int i = 1; i <= cfg.r; ++i) {
          if (!P(j, i)) continue;
          ++count;
          if (j <= i) error("p" + std::to_string(j) + " proximate to p" + std::to_string(i) + ": proximity only to earlier points");
        }
        if (count > 2) {
          rep.warnings.push_back({"p" + std::to_string(j) + " is proximate to " + std::to_string(count) + " points (a planar point has at most 2)", std::nullopt});
        }
      }
    }
  }
  return rep;
}

/// E^_i = e_i - sum of e_j over p_j proximate to p_i.
inline std::vector<DivisorClass> strict_transform_components(const ProximityMatrix& p) {
  const int r = p.rank();
  std::vector<DivisorClass> out;
  for (int i = 1; i <= r; ++i) {
    DivisorClass c = DivisorClass::basis(r, i);
    for (int j : p.proximate_to(i)) c = c - DivisorClass::basis(r, j);
    out.push_back(std::move(c));
  }
  return out;
}

struct ProximityResult {
  std::vector<Integer> slack;
  bool passes = true;
};

/// slack_i = m_i - sum over p_j proximate to p_i of m_j.
inline ProximityResult proximity_check(const Multiplicities& m, const ProximityMatrix& p) {
  if (static_cast<int>(m.size()) != p.rank()) {
    throw DimensionError("multiplicity vector of length " + std::to_string(m.size()) + " for rank " + std::to_string(p.rank()));
  }
  ProximityResult res;
  for (int i = 1; i <= p.rank(); ++i) {
    Integer s = m[static_cast<std::size_t>(i - 1)];
    for (int j : p.proximate_to(i)) s -= m[static_cast<std::size_t>(j - 1)];
    if (s < 0) res.passes = false;
    res.slack.push_back(std::move(s));
  }
  return res;
}

/// Proximity implied by the vertical curves e_i - e_j - ...: each such j is proximate to i.
inline ProximityMatrix proximity_from_curves(const SurfaceConfig& cfg) {
  ProximityMatrix P(cfg.r);
  for (const auto& c : cfg.neg_curves) {
    if (c.rank() != cfg.r || c[0] != 0) continue;
    int head = 0;
    for (int i = 1; i <= cfg.r; ++i) {
      if (c[i] > 0) head = i;
    }
    if (!head) continue;
    for (int j = 1; j <= cfg.r; ++j) {
      if (c[j] < 0) P.set(j, head);
    }
  }
  return P;
}

inline std::vector<DivisorClass> effective_generators(const SurfaceConfig& cfg) {
  auto rep = validate_config(cfg);
  if (!rep.valid()) throw ConfigurationError("invalid configuration: " + rep.summary());
  if (cfg.r == 0) return {DivisorClass::basis(0, 0)};
  if (cfg.r == 1) return {parse_class("L_1", 1), DivisorClass::basis(1, 1)};
  std::vector<DivisorClass> gens = cfg.neg_curves;
  if (cfg.r == 8) {
    DivisorClass ak = -canonical_class(8);
    if (std::find(gens.begin(), gens.end(), ak) == gens.end()) gens.push_back(ak);
  }
  return gens;
}

/// Applies the index permutation sigma (sigma[i-1] = image of i) to a class.
inline DivisorClass permute_class(const DivisorClass& c, const std::vector<int>& sigma) {
  std::vector<Integer> out(c.coeffs().begin(), c.coeffs().end());
  for (int i = 1; i <= c.rank(); ++i) out[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)])] = c[i];
  return DivisorClass(std::move(out));
}

inline SurfaceConfig permute_config(const SurfaceConfig& cfg, const std::vector<int>& sigma) {
  SurfaceConfig out{cfg.r, std::nullopt, {}};
  for (const auto& c : cfg.neg_curves) out.neg_curves.push_back(permute_class(c, sigma));
  if (cfg.proximity) {
    ProximityMatrix P(cfg.r);
    for (auto [j, i] : cfg.proximity->pairs()) P.set(sigma[static_cast<std::size_t>(j - 1)], sigma[static_cast<std::size_t>(i - 1)]);
    out.proximity = P;
  }
  return out;
}

inline Multiplicities permute_multiplicities(const Multiplicities& m, const std::vector<int>& sigma) {
  Multiplicities out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[static_cast<std::size_t>(sigma[i] - 1)] = m[i];
  return out;
}

}  // namespace waldcone
