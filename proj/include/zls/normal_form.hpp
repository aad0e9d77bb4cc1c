#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "zls/matrix.hpp"

namespace zls {

/// Row-style Hermite normal form: U * M = H with U unimodular.
/// Pivots are positive, pivot columns strictly increase, entries above a
/// pivot are reduced into [0, pivot), and zero rows sit at the bottom so the
/// shape of H always equals the shape of M.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

inline HnfResult hnf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  HnfResult res{m, IntMatrix::identity(rows), 0};
  IntMatrix& h = res.H;
  IntMatrix& u = res.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd descent in column c; smallest |entry| is promoted to the pivot slot
    // each round to keep intermediate values from blowing up
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 &&
            (best == rows || abs_int(h(i, c)) < abs_int(h(best, c))))
          best = i;
      if (best == rows) break;  // no pivot in this column
      if (best != r) {
        h.swap_rows(r, best);
        u.swap_rows(r, best);
      }
      bool clear = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = h(i, c) / h(r, c);
        if (q != 0) {
          h.add_row_multiple(i, r, -q);
          u.add_row_multiple(i, r, -q);
        }
        if (h(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
      }
    }
    ++r;
  }
  res.rank = r;
  return res;
}

inline std::size_t rank(const IntMatrix& m) { return hnf(m).rank; }

/// Smith normal form: U * M * V = D with U, V unimodular and D diagonal with
/// d1 | d2 | ... ; trailing diagonal entries are zero after the first zero.
/// invariant_factors holds the nonzero diagonal entries (positive).
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Int> invariant_factors;
};

inline SnfResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfResult res{IntMatrix::identity(rows), m, IntMatrix::identity(cols), {}};
  IntMatrix& u = res.U;
  IntMatrix& d = res.D;
  IntMatrix& v = res.V;
  const std::size_t steps = std::min(rows, cols);
  bool exhausted = false;
  for (std::size_t t = 0; t < steps && !exhausted; ++t) {
    while (true) {
      // smallest |entry| of the trailing submatrix becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 &&
              (pi == rows || abs_int(d(i, j)) < abs_int(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        exhausted = true;  // trailing submatrix is zero
        break;
      }
      if (pi != t) {
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
      }
      if (pj != t) {
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
      }
      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        if (q != 0) {
          d.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
        if (d(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        if (q != 0) {
          d.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
        if (d(t, j) != 0) clear = false;
      }
      if (!clear) continue;
      // force d(t,t) to divide the whole trailing block before moving on
      bool merged = false;
      for (std::size_t i = t + 1; i < rows && !merged; ++i)
        for (std::size_t j = t + 1; j < cols && !merged; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            merged = true;
          }
      if (!merged) break;
    }
    if (!exhausted && d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  for (std::size_t t = 0; t < steps && d(t, t) != 0; ++t)
    res.invariant_factors.push_back(d(t, t));
  return res;
}

}  // namespace zls
