#pragma once

// Candidate negative classes, roots and exceptional classes, Weyl reflections.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "waldcone/errors.hpp"
#include "waldcone/lattice.hpp"

namespace waldcone {

enum class Family { B, V, L, Q, C, M8 };

inline constexpr Family kAllFamilies[] = {Family::B, Family::V, Family::L, Family::Q, Family::C, Family::M8};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::V: return "V";
    case Family::L: return "L";
    case Family::Q: return "Q";
    case Family::C: return "C";
    case Family::M8: return "M8";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == s) return f;
  }
  throw ParseError("unknown family '" + std::string(s) + "' (expected B, V, L, Q, C or M8)");
}

struct CandidateFamily {
  Family family;
  std::vector<DivisorClass> members;
};

namespace detail {

// Calls f(subset) for every subset of {1..r} of size k, in lexicographic order.
template <class F>
void for_each_subset(int r, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  if (k > r) return;
  while (true) {
    f(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - k + i + 1) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline DivisorClass make_class(int r, long long a0, const std::vector<int>& minus, int plus = 0, long long plus_coeff = 1) {
  std::vector<Integer> c(static_cast<std::size_t>(r) + 1);
  c[0] = a0;
  for (int i : minus) c[static_cast<std::size_t>(i)] -= 1;
  if (plus) c[static_cast<std::size_t>(plus)] += plus_coeff;
  return DivisorClass(std::move(c));
}

inline void sort_unique(std::vector<DivisorClass>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// The six candidate families for 2 <= r <= 8; empty families are kept.
inline std::vector<CandidateFamily> candidate_sets(int r) {
  require_rank(r, 2, 8);
  std::vector<CandidateFamily> out;
  for (Family f : kAllFamilies) out.push_back({f, {}});
  auto& B = out[0].members;
  auto& V = out[1].members;
  auto& L = out[2].members;
  auto& Q = out[3].members;
  auto& C = out[4].members;
  auto& M = out[5].members;

  for (int i = 1; i <= r; ++i) B.push_back(DivisorClass::basis(r, i));
  for (int s = 2; s <= r; ++s) {
    detail::for_each_subset(r, s, [&](const std::vector<int>& idx) {
      std::vector<int> rest(idx.begin() + 1, idx.end());
      V.push_back(detail::make_class(r, 0, rest, idx[0]));
      L.push_back(detail::make_class(r, 1, idx));
      if (s >= 5) Q.push_back(detail::make_class(r, 2, idx));
      if (s >= 7) {
        for (int twice : idx) {
          std::vector<int> minus = idx;
          minus.push_back(twice);
          C.push_back(detail::make_class(r, 3, minus));
        }
      }
    });
  }
  if (r == 8) {
    const DivisorClass mk = -canonical_class(8);
    detail::for_each_subset(8, 3, [&](const std::vector<int>& idx) { M.push_back(mk + detail::make_class(8, 1, idx)); });
    detail::for_each_subset(8, 6, [&](const std::vector<int>& idx) { M.push_back(mk + detail::make_class(8, 2, idx)); });
    for (int k = 1; k <= 8; ++k) M.push_back(Integer(2) * mk - DivisorClass::basis(8, k));
  }
  for (auto& fam : out) detail::sort_unique(fam.members);
  return out;
}

/// Union of all candidate families, sorted and deduplicated.
inline std::vector<DivisorClass> candidate_union(int r) {
  std::vector<DivisorClass> all;
  for (auto& fam : candidate_sets(r)) all.insert(all.end(), fam.members.begin(), fam.members.end());
  detail::sort_unique(all);
  return all;
}

inline bool is_root(const DivisorClass& c) {
  return pairing(c, canonical_class(c.rank())) == 0 && self_pairing(c) == -2;
}

inline bool is_exceptional(const DivisorClass& c) {
  return pairing(c, canonical_class(c.rank())) == -1 && self_pairing(c) == -1;
}

namespace detail {

// All (a1..ar) with sum a_i = sum and sum a_i^2 = squares; appended with a0 prefix.
inline void enumerate_tails(int r, long long a0, long long sum, long long squares, std::vector<DivisorClass>& out) {
  std::vector<long long> cur(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int i, long long s, long long q) -> void {
    const long long left = r - i;
    if (left == 0) {
      if (s == 0 && q == 0) {
        std::vector<Integer> c(static_cast<std::size_t>(r) + 1);
        c[0] = a0;
        for (int k = 0; k < r; ++k) c[static_cast<std::size_t>(k) + 1] = cur[static_cast<std::size_t>(k)];
        out.emplace_back(std::move(c));
      }
      return;
    }
    if (q < 0 || s * s > left * q) return;
    long long bound = 0;
    while ((bound + 1) * (bound + 1) <= q) ++bound;
    for (long long a = -bound; a <= bound; ++a) {
      cur[static_cast<std::size_t>(i)] = a;
      self(self, i + 1, s - a, q - a * a);
    }
  };
  rec(rec, 0, sum, squares);
}

}  // namespace detail

/// Classes with k.c = 0 and c^2 = -2, for 3 <= r <= 8.
inline std::vector<DivisorClass> enumerate_roots(int r) {
  require_rank(r, 3, 8);
  std::vector<DivisorClass> out;
  for (long long a0 = -4; a0 <= 4; ++a0) detail::enumerate_tails(r, a0, -3 * a0, a0 * a0 + 2, out);
  detail::sort_unique(out);
  return out;
}

/// Classes with k.c = c^2 = -1 and a0 >= 0, for 1 <= r <= 8.
inline std::vector<DivisorClass> enumerate_exceptional(int r) {
  require_rank(r, 1, 8);
  std::vector<DivisorClass> out;
  for (long long a0 = 0; a0 <= 7; ++a0) detail::enumerate_tails(r, a0, 1 - 3 * a0, a0 * a0 + 1, out);
  detail::sort_unique(out);
  return out;
}

/// [e0-e1-e2-e3, e1-e2, ..., e_{r-1}-e_r].
inline std::vector<DivisorClass> simple_roots(int r) {
  require_rank(r, 3, 8);
  std::vector<DivisorClass> out;
  out.push_back(detail::make_class(r, 1, {1, 2, 3}));
  for (int i = 2; i <= r; ++i) out.push_back(detail::make_class(r, 0, {i}, i - 1));
  return out;
}

inline DivisorClass reflect(const DivisorClass& v, const DivisorClass& alpha) {
  DivisorClass::check_same_rank(v, alpha);
  if (!is_root(alpha)) throw InvalidRootError("reflection in " + format_class(alpha) + ", which is not a root");
  return v + pairing(v, alpha) * alpha;
}

inline constexpr std::size_t kOrbitCap = 1'000'000;

/// Closure of {v} under the simple reflections, sorted.
inline std::vector<DivisorClass> weyl_orbit(const DivisorClass& v, int r, std::size_t cap = kOrbitCap) {
  require_rank(r, 3, 8);
  if (v.rank() != r) throw DimensionError("class of rank " + std::to_string(v.rank()) + " in a rank " + std::to_string(r) + " orbit");
  const auto gens = simple_roots(r);
  std::unordered_set<DivisorClass, DivisorClassHash> seen{v};
  std::deque<DivisorClass> queue{v};
  while (!queue.empty()) {
    DivisorClass u = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : gens) {
      DivisorClass w = u + pairing(u, a) * a;
      if (seen.insert(w).second) {
        if (seen.size() > cap) throw OrbitTooLargeError("orbit of " + format_class(v) + " exceeds " + std::to_string(cap) + " classes");
        queue.push_back(std::move(w));
      }
    }
  }
  std::vector<DivisorClass> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace waldcone
