#pragma once

// The lattice I^{1,r} = Z^{r+1} with form diag(1,-1,...,-1), basis e0 (the line
// class L) and e1..er (the exceptional classes E_i).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waldcone/errors.hpp"
#include "waldcone/rational.hpp"

namespace waldcone {

inline constexpr int kMaxRank = 8;

inline void require_rank(int r, int lo = 0, int hi = kMaxRank) {
  if (r < lo || r > hi) {
    throw UnsupportedRankError("unsupported rank r=" + std::to_string(r) + " (expected " +
                               std::to_string(lo) + ".." + std::to_string(hi) + ")");
  }
}

/// An immutable integer class a0*e0 + a1*e1 + ... + ar*er.
class DivisorClass {
 public:
  DivisorClass() : coeffs_(1) {}

  explicit DivisorClass(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DimensionError("a divisor class needs at least the e0 coordinate");
    require_rank(rank());
  }

  DivisorClass(std::initializer_list<long long> coeffs)
      : DivisorClass(std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

  static DivisorClass zero(int r) {
    require_rank(r);
    return DivisorClass(std::vector<Integer>(static_cast<std::size_t>(r) + 1));
  }

  /// e_i in rank r; i = 0 is the line class.
  static DivisorClass basis(int r, int i) {
    require_rank(r);
    if (i < 0 || i > r) throw DimensionError("basis index " + std::to_string(i) + " outside 0.." + std::to_string(r));
    std::vector<Integer> c(static_cast<std::size_t>(r) + 1);
    c[static_cast<std::size_t>(i)] = 1;
    return DivisorClass(std::move(c));
  }

  int rank() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const Integer& degree() const { return coeffs_.front(); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& a) { return a == 0; });
  }

  friend DivisorClass operator+(const DivisorClass& u, const DivisorClass& v) {
    check_same_rank(u, v);
    std::vector<Integer> c(u.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += v.coeffs_[i];
    return DivisorClass(std::move(c));
  }

  friend DivisorClass operator-(const DivisorClass& u, const DivisorClass& v) {
    check_same_rank(u, v);
    std::vector<Integer> c(u.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= v.coeffs_[i];
    return DivisorClass(std::move(c));
  }

  friend DivisorClass operator-(const DivisorClass& u) {
    std::vector<Integer> c(u.coeffs_);
    for (auto& a : c) a = -a;
    return DivisorClass(std::move(c));
  }

  friend DivisorClass operator*(const Integer& s, const DivisorClass& u) {
    std::vector<Integer> c(u.coeffs_);
    for (auto& a : c) a *= s;
    return DivisorClass(std::move(c));
  }

  friend bool operator==(const DivisorClass& u, const DivisorClass& v) { return u.coeffs_ == v.coeffs_; }

  /// Lexicographic on (rank, coefficients).
  friend std::strong_ordering operator<=>(const DivisorClass& u, const DivisorClass& v) {
    if (auto c = u.rank() <=> v.rank(); c != 0) return c;
    for (std::size_t i = 0; i < u.coeffs_.size(); ++i) {
      if (u.coeffs_[i] < v.coeffs_[i]) return std::strong_ordering::less;
      if (v.coeffs_[i] < u.coeffs_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  static void check_same_rank(const DivisorClass& u, const DivisorClass& v) {
    if (u.rank() != v.rank()) {
      throw DimensionError("rank mismatch: " + std::to_string(u.rank()) + " vs " + std::to_string(v.rank()));
    }
  }

 private:
  std::vector<Integer> coeffs_;
};

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& c) const {
    std::size_t h = static_cast<std::size_t>(c.rank()) * 0x9e3779b97f4a7c15ULL;
    for (const auto& a : c.coeffs()) {
      std::size_t x;
      if (auto small = to_int64(a)) {
        x = std::hash<std::int64_t>{}(*small);
      } else {
        x = std::hash<std::string>{}(a.str());
      }
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// a0*b0 - sum_{i>=1} ai*bi.
inline Integer pairing(const DivisorClass& u, const DivisorClass& v) {
  DivisorClass::check_same_rank(u, v);
  Integer s = u[0] * v[0];
  for (int i = 1; i <= u.rank(); ++i) s -= u[i] * v[i];
  return s;
}

inline Integer self_pairing(const DivisorClass& u) { return pairing(u, u); }

/// k = -3e0 + e1 + ... + er.
inline DivisorClass canonical_class(int r) {
  require_rank(r);
  std::vector<Integer> c(static_cast<std::size_t>(r) + 1, Integer(1));
  c[0] = -3;
  return DivisorClass(std::move(c));
}

/// Sum of m_i e_i for a multiplicity vector of length r.
inline DivisorClass exceptional_sum(std::span<const Integer> m) {
  std::vector<Integer> c(m.size() + 1);
  for (std::size_t i = 0; i < m.size(); ++i) c[i + 1] = m[i];
  return DivisorClass(std::move(c));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto issp = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
  while (!s.empty() && issp(s.front())) s.remove_prefix(1);
  while (!s.empty() && issp(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<int> parse_digits(std::string_view digits, int r, std::string_view whole,
                                     std::vector<bool>& used) {
  std::vector<int> out;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw ParseError("bad index '" + std::string(1, ch) + "' in '" + std::string(whole) + "'");
    int i = ch - '0';
    if (i > r) throw ParseError("index " + std::to_string(i) + " exceeds r=" + std::to_string(r) + " in '" + std::string(whole) + "'");
    if (used[static_cast<std::size_t>(i)]) throw ParseError("repeated index " + std::to_string(i) + " in '" + std::string(whole) + "'");
    used[static_cast<std::size_t>(i)] = true;
    out.push_back(i);
  }
  return out;
}

inline DivisorClass parse_raw_class(std::string_view text, int r) {
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Integer> c;
  while (true) {
    auto comma = body.find(',');
    std::string_view piece = trim(body.substr(0, comma));
    if (piece.empty()) throw ParseError("empty coordinate in '" + std::string(text) + "'");
    c.push_back(parse_integer(piece));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (static_cast<int>(c.size()) != r + 1) {
    throw ParseError("'" + std::string(text) + "' has " + std::to_string(c.size()) +
                     " coordinates, expected " + std::to_string(r + 1));
  }
  return DivisorClass(std::move(c));
}

}  // namespace detail

/// Parses the class notation:
///   L, K, -K, E_ij..., L_ij..., Q_ij..., C_i;jk..., or a raw vector [a0,a1,...,ar].
/// Named forms use single-digit indices 1..r without repetition.
inline DivisorClass parse_class(std::string_view text, int r) {
  require_rank(r);
  std::string_view s = detail::trim(text);
  if (s.empty()) throw ParseError("empty class text");
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated raw class '" + std::string(s) + "'");
    return detail::parse_raw_class(s, r);
  }
  if (s == "L") return DivisorClass::basis(r, 0);
  if (s == "K") return canonical_class(r);
  if (s == "-K") return -canonical_class(r);
  if (s.size() < 3 || s[1] != '_') throw ParseError("malformed class '" + std::string(s) + "'");

  const char kind = s[0];
  std::string_view rest = s.substr(2);
  std::vector<bool> used(static_cast<std::size_t>(kMaxRank) + 2, false);
  std::vector<Integer> c(static_cast<std::size_t>(r) + 1);

  switch (kind) {
    case 'E': {
      auto idx = detail::parse_digits(rest, r, s, used);
      c[static_cast<std::size_t>(idx[0])] = 1;
      for (std::size_t k = 1; k < idx.size(); ++k) c[static_cast<std::size_t>(idx[k])] = -1;
      break;
    }
    case 'L':
    case 'Q': {
      auto idx = detail::parse_digits(rest, r, s, used);
      c[0] = (kind == 'L') ? 1 : 2;
      for (int i : idx) c[static_cast<std::size_t>(i)] = -1;
      break;
    }
    case 'C': {
      auto semi = rest.find(';');
      if (semi != 1) throw ParseError("cubic class needs the form C_i;jk..., got '" + std::string(s) + "'");
      auto head = detail::parse_digits(rest.substr(0, 1), r, s, used);
      auto tail = detail::parse_digits(rest.substr(2), r, s, used);
      c[0] = 3;
      c[static_cast<std::size_t>(head[0])] = -2;
      for (int i : tail) c[static_cast<std::size_t>(i)] = -1;
      break;
    }
    default:
      throw ParseError("unknown class kind '" + std::string(1, kind) + "' in '" + std::string(s) + "'");
  }
  return DivisorClass(std::move(c));
}

/// Canonical spelling: named form when one applies, raw vector otherwise.
inline std::string format_class(const DivisorClass& c) {
  const int r = c.rank();
  if (c == DivisorClass::basis(r, 0)) return "L";
  if (c == canonical_class(r)) return "K";
  if (c == -canonical_class(r)) return "-K";

  std::vector<int> minus_one, minus_two, plus_one;
  bool other = false;
  for (int i = 1; i <= r; ++i) {
    if (c[i] == 0) continue;
    if (c[i] == -1) {
      minus_one.push_back(i);
    } else if (c[i] == -2) {
      minus_two.push_back(i);
    } else if (c[i] == 1) {
      plus_one.push_back(i);
    } else {
      other = true;
    }
  }
  auto digits = [](const std::vector<int>& v) {
    std::string s;
    for (int i : v) s += static_cast<char>('0' + i);
    return s;
  };

  if (!other) {
    const Integer& a0 = c[0];
    if (a0 == 0 && plus_one.size() == 1 && minus_two.empty()) {
      return "E_" + digits(plus_one) + digits(minus_one);
    }
    if ((a0 == 1 || a0 == 2) && plus_one.empty() && minus_two.empty() && !minus_one.empty()) {
      return std::string(a0 == 1 ? "L_" : "Q_") + digits(minus_one);
    }
    if (a0 == 3 && plus_one.empty() && minus_two.size() == 1) {
      return "C_" + digits(minus_two) + ";" + digits(minus_one);
    }
  }

  std::string out = "[";
  for (int i = 0; i <= r; ++i) {
    if (i) out += ",";
    out += c[i].str();
  }
  return out + "]";
}

}  // namespace waldcone
