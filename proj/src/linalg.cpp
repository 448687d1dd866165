#include "lorentz/linalg.hpp"

#include <algorithm>
#include <utility>

namespace lorentz::linalg {

Echelon rref(RatMatrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }
std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::size_t rank(std::span<const IntVec> vectors) {
  if (vectors.empty()) return 0;
  RatMatrix m(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != m.cols()) throw DimensionMismatch("rank: vectors of unequal length");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
  }
  return rank(m);
}

std::vector<RatVec> kernel(const RatMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  LinearSolution s;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return s;
  s.consistent = true;
  s.unique = e.pivots.size() == a.cols();
  s.particular.assign(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.particular[e.pivots[r]] = e.reduced(r, a.cols());
  return s;
}

Rational determinant(RatMatrix m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

namespace {

// Adds row/column `src` to row/column `dst` (a congruence transformation).
void add_congruent(RatMatrix& m, std::size_t dst, std::size_t src, const Rational& f) {
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) m(dst, j) += f * m(src, j);
  for (std::size_t i = 0; i < n; ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

Inertia inertia(RatMatrix m) {
  if (!m.square()) throw DimensionMismatch("inertia of a non-square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw DomainError("inertia: matrix is not symmetric");

  Inertia out;
  std::vector<bool> done(m.rows(), false);
  std::size_t remaining = m.rows();
  while (remaining > 0) {
    // Prefer a nonzero diagonal pivot.
    std::size_t piv = m.rows();
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!done[i] && m(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == m.rows()) {
      // All remaining diagonal entries vanish; find an off-diagonal entry.
      std::size_t a = m.rows(), b = m.rows();
      for (std::size_t i = 0; i < m.rows() && a == m.rows(); ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < m.rows(); ++j)
          if (!done[j] && m(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
      }
      if (a == m.rows()) {
        out.zero += remaining;
        break;
      }
      // Block [[0,x],[x,0]]: e_a + e_b has norm 2x, nonzero, so a diagonal
      // pivot appears after the congruence.
      add_congruent(m, a, b, Rational(1));
      piv = a;
    }
    const Rational d = m(piv, piv);
    (d > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (done[i] || i == piv || m(i, piv) == 0) continue;
      Rational f = -m(i, piv) / d;
      add_congruent(m, i, piv, f);
    }
    done[piv] = true;
    --remaining;
  }
  return out;
}

std::vector<Integer> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
  };
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pi == rows || abs(m(i, j)) < abs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Integer q = floor_div(m(i, t), m(t, t));
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) {
          swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Integer q = floor_div(m(t, j), m(t, t));
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t k = t; k < cols; ++k) m(t, k) += m(i, k);
            clean = false;
            break;
          }
    }
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  return diag;
}

}  // namespace lorentz::linalg
