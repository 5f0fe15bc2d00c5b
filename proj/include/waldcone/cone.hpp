#pragma once

// Exact rational LP over the effective cone: membership, nef test,
// Waldschmidt constants with certificates, initial degree.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "waldcone/config.hpp"
#include "waldcone/errors.hpp"
#include "waldcone/lattice.hpp"
#include "waldcone/rational.hpp"
#include "waldcone/simplex.hpp"

namespace waldcone {

/// dL - E_Z for the multiplicity vector m, d may be rational.
inline std::vector<Rational> target_vector(const Rational& d, const Multiplicities& m) {
  std::vector<Rational> v{d};
  for (const auto& x : m) v.emplace_back(-x);
  return v;
}

inline DivisorClass target_class(const Integer& d, const Integer& scale, const Multiplicities& m) {
  std::vector<Integer> c{d};
  for (const auto& x : m) c.push_back(-scale * x);
  return DivisorClass(std::move(c));
}

/// Nonnegative rational lambda with sum lambda_g g = D, if D lies in the cone spanned by G.
inline std::optional<std::vector<Rational>> cone_membership(const DivisorClass& D, const std::vector<DivisorClass>& G) {
  for (const auto& g : G) DivisorClass::check_same_rank(D, g);
  if (D.is_zero()) return std::vector<Rational>(G.size());
  const int r = D.rank();
  std::vector<std::vector<Rational>> A(static_cast<std::size_t>(r) + 1, std::vector<Rational>(G.size()));
  std::vector<Rational> b(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) {
    b[static_cast<std::size_t>(i)] = D[i];
    for (std::size_t j = 0; j < G.size(); ++j) A[static_cast<std::size_t>(i)][j] = G[j][i];
  }
  auto res = solve_lp(A, b, std::vector<Rational>(G.size()));
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.x;
}

/// Integer feasibility of D = sum lambda_g g, lambda_g >= 0, by bounded depth-first search.
/// Built once per generator set; solve() may be called for many targets.
class MonoidSolver {
 public:
  using Vec = std::array<std::int64_t, kMaxRank + 1>;

  explicit MonoidSolver(std::vector<DivisorClass> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) return;
    r_ = gens_.front().rank();
    for (const auto& g : gens_) {
      DivisorClass::check_same_rank(g, gens_.front());
      if (g.is_zero()) throw ArgumentError("zero generator in a monoid membership problem");
    }
    order_ = ordering();
    for (std::size_t k : order_) g64_.push_back(narrow(gens_[k]));
    build_witnesses();
    build_suffix_tables();
  }

  const std::vector<DivisorClass>& generators() const { return gens_; }

  std::optional<std::vector<Integer>> solve(const DivisorClass& D) const {
    if (gens_.empty()) {
      if (D.is_zero()) return std::vector<Integer>{};
      return std::nullopt;
    }
    DivisorClass::check_same_rank(D, gens_.front());
    Vec R = narrow(D);
    for (const auto& w : witnesses_) {
      if (dot(w, R) < 0) return std::nullopt;
    }

    // Tightest witnesses on D go into the search.
    std::vector<std::pair<long double, std::size_t>> score;
    for (std::size_t k = 0; k < witnesses_.size(); ++k) {
      score.emplace_back(static_cast<long double>(dot(witnesses_[k], R)) / static_cast<long double>(witnesses_[k][0] + 1), k);
    }
    std::sort(score.begin(), score.end());
    Search s{this, {}, {}, {}};
    for (std::size_t k = 0; k < score.size() && k < kActiveWitnesses; ++k) s.active.push_back(witnesses_[score[k].second]);
    for (const auto& bw : bounding_) s.active.push_back(bw);
    s.lambda.assign(g64_.size(), 0);

    if (!s.run(0, R)) return std::nullopt;
    std::vector<Integer> out(gens_.size());
    for (std::size_t p = 0; p < order_.size(); ++p) out[order_[p]] = s.lambda[p];
    return out;
  }

 private:
  static constexpr std::size_t kActiveWitnesses = 10;
  static constexpr std::int64_t kLimit = std::int64_t(1) << 40;

  Vec narrow(const DivisorClass& c) const {
    Vec v{};
    for (int i = 0; i <= c.rank(); ++i) {
      auto x = to_int64(c[i]);
      if (!x || *x > kLimit || *x < -kLimit) throw ArgumentError("class " + format_class(c) + " too large for monoid search");
      v[static_cast<std::size_t>(i)] = *x;
    }
    return v;
  }

  std::int64_t dot(const Vec& u, const Vec& v) const {
    std::int64_t s = u[0] * v[0];
    for (int i = 1; i <= r_; ++i) s -= u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    return s;
  }

  // Positive-degree generators first (higher degree earlier), vertical ones last.
  std::vector<std::size_t> ordering() const {
    std::vector<std::size_t> idx(gens_.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const auto &ga = gens_[a], &gb = gens_[b];
      if (ga[0] != gb[0]) return ga[0] > gb[0];
      return ga < gb;
    });
    return idx;
  }

  bool nef_on_gens(const Vec& w) const {
    for (const auto& g : g64_) {
      if (dot(w, g) < 0) return false;
    }
    return true;
  }

  void build_witnesses() {
    const int r = r_;
    // Fixed candidates: an ample-like class, the line class and -K.
    Vec A{}, E0{}, AK{};
    A[0] = 3 * (std::int64_t(1) << r);
    for (int i = 1; i <= r; ++i) A[static_cast<std::size_t>(i)] = -(std::int64_t(1) << (r - i));
    E0[0] = 1;
    AK[0] = 3;
    for (int i = 1; i <= r; ++i) AK[static_cast<std::size_t>(i)] = -1;
    for (const Vec& w : {A, E0, AK}) {
      if (nef_on_gens(w)) witnesses_.push_back(w);
    }

    // Small nef classes from a box.
    int max_deg = 6, lo = -3, hi = 1;
    if (r == 6) max_deg = 5;
    if (r == 7) max_deg = 5, lo = -2;
    if (r >= 8) max_deg = 4, lo = -2, hi = 0;
    Vec w{};
    auto rec = [&](auto&& self, int i) -> void {
      if (i > r) {
        if (nef_on_gens(w)) witnesses_.push_back(w);
        return;
      }
      for (std::int64_t a = lo; a <= hi; ++a) {
        w[static_cast<std::size_t>(i)] = a;
        self(self, i + 1);
      }
    };
    for (std::int64_t d = 1; d <= max_deg; ++d) {
      w[0] = d;
      rec(rec, 1);
    }
    std::sort(witnesses_.begin(), witnesses_.end());
    witnesses_.erase(std::unique(witnesses_.begin(), witnesses_.end()), witnesses_.end());

    // Every generator needs a witness that pairs strictly positively with it.
    for (std::size_t p = 0; p < g64_.size(); ++p) {
      const Vec* best = nullptr;
      for (const auto& wt : witnesses_) {
        if (dot(wt, g64_[p]) > 0) {
          best = &wt;
          break;
        }
      }
      if (!best) {
        throw BoundingFailureError("no nef witness bounds the coefficient of " + format_class(gens_[order_[p]]));
      }
      if (std::find(bounding_.begin(), bounding_.end(), *best) == bounding_.end()) bounding_.push_back(*best);
    }
  }

  void build_suffix_tables() {
    const std::size_t n = g64_.size();
    // For each coordinate: does any generator at position >= p have a positive / negative entry?
    has_pos_.assign(n + 1, {});
    has_neg_.assign(n + 1, {});
    last_touch_.assign(n, -1);
    for (std::size_t p = n; p-- > 0;) {
      has_pos_[p] = has_pos_[p + 1];
      has_neg_[p] = has_neg_[p + 1];
      for (int i = 0; i <= r_; ++i) {
        auto x = g64_[p][static_cast<std::size_t>(i)];
        if (x > 0) has_pos_[p][static_cast<std::size_t>(i)] = true;
        if (x < 0) has_neg_[p][static_cast<std::size_t>(i)] = true;
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (int i = 0; i <= r_; ++i) {
        if (g64_[p][static_cast<std::size_t>(i)] == 0) continue;
        if (!has_pos_[p + 1][static_cast<std::size_t>(i)] && !has_neg_[p + 1][static_cast<std::size_t>(i)]) {
          last_touch_[p] = i;
          break;
        }
      }
    }
  }

  struct VecHash {
    std::size_t operator()(const std::pair<std::size_t, Vec>& k) const {
      std::size_t h = k.first;
      for (auto x : k.second) h = h * 1000003u ^ static_cast<std::size_t>(x);
      return h;
    }
  };

  struct Search {
    const MonoidSolver* S;
    std::vector<Vec> active;
    std::vector<std::int64_t> lambda;
    std::unordered_set<std::pair<std::size_t, Vec>, VecHash> dead;

    bool signs_ok(std::size_t p, const Vec& R) const {
      for (int i = 0; i <= S->r_; ++i) {
        auto x = R[static_cast<std::size_t>(i)];
        if (x > 0 && !S->has_pos_[p][static_cast<std::size_t>(i)]) return false;
        if (x < 0 && !S->has_neg_[p][static_cast<std::size_t>(i)]) return false;
      }
      return true;
    }

    bool run(std::size_t p, const Vec& R) {
      const std::size_t n = S->g64_.size();
      if (p == n) {
        for (int i = 0; i <= S->r_; ++i) {
          if (R[static_cast<std::size_t>(i)] != 0) return false;
        }
        return true;
      }
      if (!signs_ok(p, R)) return false;
      std::int64_t hi = std::numeric_limits<std::int64_t>::max();
      const Vec& g = S->g64_[p];
      for (const auto& w : active) {
        std::int64_t wr = S->dot(w, R);
        if (wr < 0) return false;
        std::int64_t wg = S->dot(w, g);
        if (wg > 0) hi = std::min(hi, wr / wg);
      }
      if (hi == std::numeric_limits<std::int64_t>::max()) return false;
      auto key = std::make_pair(p, R);
      if (dead.count(key)) return false;

      std::int64_t lo = 0;
      if (int c = S->last_touch_[p]; c >= 0) {
        auto rc = R[static_cast<std::size_t>(c)], gc = g[static_cast<std::size_t>(c)];
        if (rc % gc != 0 || rc / gc < 0 || rc / gc > hi) {
          dead.insert(std::move(key));
          return false;
        }
        lo = hi = rc / gc;
      }
      for (std::int64_t k = hi; k >= lo; --k) {
        Vec next = R;
        for (int i = 0; i <= S->r_; ++i) next[static_cast<std::size_t>(i)] -= k * g[static_cast<std::size_t>(i)];
        lambda[p] = k;
        if (run(p + 1, next)) return true;
      }
      lambda[p] = 0;
      dead.insert(std::move(key));
      return false;
    }
  };

  std::vector<DivisorClass> gens_;
  int r_ = 0;
  std::vector<std::size_t> order_;
  std::vector<Vec> g64_;
  std::vector<Vec> witnesses_;
  std::vector<Vec> bounding_;
  std::vector<std::array<bool, kMaxRank + 1>> has_pos_, has_neg_;
  std::vector<int> last_touch_;
};

inline std::optional<std::vector<Integer>> monoid_membership(const DivisorClass& D, const std::vector<DivisorClass>& G) {
  for (const auto& g : G) DivisorClass::check_same_rank(D, g);
  return MonoidSolver(G).solve(D);
}

inline bool is_nef(const DivisorClass& F, const SurfaceConfig& cfg) {
  for (const auto& g : effective_generators(cfg)) {
    if (pairing(F, g) < 0) return false;
  }
  return true;
}

struct Certificate {
  Multiplicities multiplicities;
  Integer d;
  Integer m;
  std::vector<std::pair<DivisorClass, Rational>> decomposition;
  DivisorClass nef;

  DivisorClass divisor() const { return target_class(d, m, multiplicities); }
};

struct WaldschmidtResult {
  Rational value;
  std::optional<Certificate> certificate;
  /// Dual optimum pairing(F, E_Z) / pairing(F, L); equals value by LP duality.
  Rational dual_value;
};

inline void check_waldschmidt_input(const SurfaceConfig& cfg, const Multiplicities& m) {
  check_multiplicities(m, cfg.r);
  if (cfg.proximity) {
    auto pc = proximity_check(m, *cfg.proximity);
    if (!pc.passes) {
      std::string s;
      for (const auto& x : pc.slack) s += (s.empty() ? "" : ",") + x.str();
      throw ProximityViolationError("multiplicities violate the proximity inequalities (slack " + s + ")");
    }
  }
}

/// min t such that t L - E_Z lies in the rational effective cone, with a certificate.
inline WaldschmidtResult waldschmidt(const SurfaceConfig& cfg, const Multiplicities& m) {
  const auto gens = effective_generators(cfg);
  check_waldschmidt_input(cfg, m);
  if (std::all_of(m.begin(), m.end(), [](const Integer& x) { return x == 0; })) return {Rational(0), std::nullopt, Rational(0)};

  const int r = cfg.r;
  const std::size_t n = gens.size();
  std::vector<std::vector<Rational>> A(static_cast<std::size_t>(r) + 1, std::vector<Rational>(n + 1));
  for (int i = 0; i <= r; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[static_cast<std::size_t>(i)][j] = gens[j][i];
  }
  A[0][n] = -1;
  std::vector<Rational> b = target_vector(Rational(0), m);
  std::vector<Rational> c(n + 1);
  c[n] = 1;

  auto res = solve_lp(A, b, c);
  if (res.status != LpStatus::Optimal) {
    throw InconsistentConfigurationError("no multiple of L minus E_Z lies in the effective cone");
  }
  const Rational t = res.value;

  Integer scale = denominator_of(t);
  for (std::size_t j = 0; j < n; ++j) scale = lcm_of(scale, denominator_of(res.x[j]));

  Certificate cert;
  cert.multiplicities = m;
  cert.m = scale;
  cert.d = numerator_of(t * scale);
  for (std::size_t j = 0; j < n; ++j) {
    if (res.x[j] != 0) cert.decomposition.emplace_back(gens[j], res.x[j] * scale);
  }

  // Dual y gives F = (-y0, y1, ..., yr), made primitive integral.
  std::vector<Rational> f(static_cast<std::size_t>(r) + 1);
  f[0] = -res.dual[0];
  for (int i = 1; i <= r; ++i) f[static_cast<std::size_t>(i)] = res.dual[static_cast<std::size_t>(i)];
  Rational fl = f[0], fz = 0;
  for (int i = 1; i <= r; ++i) fz += f[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i - 1)];
  Integer den = 1;
  for (const auto& x : f) den = lcm_of(den, denominator_of(x));
  Integer g = 0;
  std::vector<Integer> fi;
  for (const auto& x : f) {
    fi.push_back(numerator_of(x * den));
    g = gcd_of(g, fi.back());
  }
  if (g > 1) {
    for (auto& x : fi) x /= g;
  }
  cert.nef = DivisorClass(std::move(fi));

  WaldschmidtResult out{t, std::move(cert), fl == 0 ? Rational(0) : -fz / fl};
  return out;
}

/// Re-checks a certificate from its fields and the configuration alone.
inline bool verify_certificate(const Certificate& cert, const SurfaceConfig& cfg) {
  std::vector<DivisorClass> gens;
  try {
    gens = effective_generators(cfg);
  } catch (const Error&) {
    return false;
  }
  const int r = cfg.r;
  if (static_cast<int>(cert.multiplicities.size()) != r) return false;
  for (const auto& x : cert.multiplicities) {
    if (x < 0) return false;
  }
  if (cert.d <= 0 || cert.m <= 0) return false;
  if (cert.nef.rank() != r || cert.nef.is_zero()) return false;

  std::vector<Rational> sum(static_cast<std::size_t>(r) + 1);
  for (const auto& [g, lam] : cert.decomposition) {
    if (g.rank() != r || lam < 0) return false;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) return false;
    for (int i = 0; i <= r; ++i) sum[static_cast<std::size_t>(i)] += lam * g[i];
  }
  const DivisorClass D = cert.divisor();
  for (int i = 0; i <= r; ++i) {
    if (sum[static_cast<std::size_t>(i)] != Rational(D[i])) return false;
  }
  for (const auto& g : gens) {
    if (pairing(cert.nef, g) < 0) return false;
  }
  return pairing(D, cert.nef) == 0;
}

/// Least d with dL - E_Z in the integer effective monoid.
inline Integer alpha_degree(const SurfaceConfig& cfg, const Multiplicities& m) {
  auto wr = waldschmidt(cfg, m);
  if (!wr.certificate) return 0;
  Integer total = 0;
  for (const auto& x : m) total += x;
  MonoidSolver solver(effective_generators(cfg));
  for (Integer d = ceil_of(wr.value); d <= total + 1; ++d) {
    if (solver.solve(target_class(d, 1, m))) return d;
  }
  throw InconsistentConfigurationError("no degree up to " + Integer(total + 1).str() + " meets the multiplicities");
}

/// alpha_hat >= (alpha + 1) / 2; vacuously true when m = 0.
inline bool chudnovsky_check(const SurfaceConfig& cfg, const Multiplicities& m) {
  auto wr = waldschmidt(cfg, m);
  if (!wr.certificate) return true;
  Integer a = alpha_degree(cfg, m);
  return wr.value >= Rational(a + 1, 2);
}

}  // namespace waldcone
