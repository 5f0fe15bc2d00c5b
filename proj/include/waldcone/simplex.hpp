#pragma once

// Two-phase primal simplex over exact rationals with Bland's rule.
//   minimize c.x  subject to  A x = b,  x >= 0
// On optimality also returns a dual vector y with y.A <= c and y.b = c.x.

#include <cstddef>
#include <vector>

#include "waldcone/errors.hpp"
#include "waldcone/rational.hpp"

namespace waldcone {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational value;
  std::vector<Rational> dual;
};

namespace detail {

class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b)
      : m_(A.size()), n_(A.empty() ? 0 : A[0].size()), sign_(m_, 1), basis_(m_) {
    const std::size_t width = n_ + m_ + 1;
    rows_.assign(m_, std::vector<Rational>(width));
    for (std::size_t i = 0; i < m_; ++i) {
      if (A[i].size() != n_) throw DimensionError("ragged constraint matrix");
      if (b[i] < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sign_[i] * A[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][width - 1] = sign_[i] * b[i];
      basis_[i] = n_ + i;
    }
  }

  // Runs simplex on `cost` (length n+m). Columns >= limit never enter.
  // Returns false when the objective is unbounded below.
  bool optimize(const std::vector<Rational>& cost, std::size_t limit) {
    std::vector<Rational> rc(limit);
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
          if (rows_[i][j] != 0) r -= cost[basis_[i]] * rows_[i][j];
        }
        if (r < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;

      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs(i) / rows_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t width = rows_[row].size();
    Rational p = rows_[row][col];
    for (auto& v : rows_[row]) {
      if (v != 0) v /= p;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      Rational f = rows_[i][col];
      for (std::size_t j = 0; j < width; ++j) {
        if (rows_[row][j] != 0) rows_[i][j] -= f * rows_[row][j];
      }
    }
    basis_[row] = col;
  }

  // After phase 1: pivot artificial basics out where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0 && !is_basic(j)) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  const Rational& rhs(std::size_t i) const { return rows_[i].back(); }

  Rational artificial_sum() const {
    Rational s;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) s += rhs(i);
    }
    return s;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rhs(i);
    }
    return x;
  }

  // y = S * (B^{-1})^T c_B; the artificial block holds B^{-1} of the sign-flipped system.
  std::vector<Rational> dual(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      Rational s;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& cb = cost[basis_[i]];
        if (cb != 0) s += cb * rows_[i][n_ + k];
      }
      y[k] = sign_[k] * s;
    }
    return y;
  }

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

 private:
  std::size_t m_, n_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace detail

inline LpResult solve_lp(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                         const std::vector<Rational>& c) {
  if (A.size() != b.size()) throw DimensionError("constraint matrix and right-hand side disagree");
  const std::size_t n = A.empty() ? c.size() : A[0].size();
  if (c.size() != n) throw DimensionError("cost vector has the wrong length");

  detail::Tableau T(A, b);
  const std::size_t m = T.m();
  LpResult res;

  std::vector<Rational> phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  T.optimize(phase1, n + m);
  if (T.artificial_sum() != 0) return res;
  T.expel_artificials();

  std::vector<Rational> phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!T.optimize(phase2, n)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x = T.primal();
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  res.dual = T.dual(phase2);
  return res;
}

}  // namespace waldcone
