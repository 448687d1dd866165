#pragma once

// Shared fixtures and independent reference computations for the tests.
// The oracles use plain machine integers and brute force on purpose: they
// share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lorentz/io.hpp"
#include "lorentz/lattice.hpp"

namespace fx {

inline lorentz::Lattice load(const std::string& name) {
  return lorentz::io::load_lattice(std::string(LORENTZ_FIXTURES) + "/" + name);
}

inline std::string path(const std::string& name) { return std::string(LORENTZ_FIXTURES) + "/" + name; }

inline lorentz::IntVec v(std::initializer_list<long> xs) { return lorentz::make_intvec(xs); }

inline lorentz::RatVec q(std::initializer_list<std::pair<long, long>> xs) {
  lorentz::RatVec out;
  for (auto [a, b] : xs) {
    lorentz::Rational r(a, b);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

// Names used throughout for the triangle lattice.
inline lorentz::IntVec d1() { return v({1, 0, 0}); }
inline lorentz::IntVec d2() { return v({0, 1, 0}); }
inline lorentz::IntVec d3() { return v({0, 0, 1}); }
inline lorentz::IntVec c() { return v({0, 1, 1}); }
inline lorentz::IntVec f01() { return v({4, 2, 0}); }
inline lorentz::IntVec f02() { return v({4, 0, 2}); }
inline lorentz::RootSet triangle() { return {d1(), d2(), d3()}; }

}  // namespace fx

namespace oracle {

using ll = long;  // 64-bit; gmpxx has no long long constructors
using Vec = std::vector<ll>;
using Mat = std::vector<Vec>;

inline Mat gram(const lorentz::Lattice& l) {
  Mat g(l.rank(), Vec(l.rank()));
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) g[i][j] = l.gram()(i, j).get_si();
  return g;
}

inline Vec to_vec(std::span<const lorentz::Integer> x) {
  Vec out;
  for (const auto& e : x) out.push_back(e.get_si());
  return out;
}

inline ll form(const Mat& g, const Vec& x, const Vec& y) {
  ll s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g[i][j] * y[j];
  return s;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat c(a.size(), Vec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Reflection matrix (columns are images) by the textbook formula.
inline Mat reflection(const Mat& g, const Vec& d) {
  const std::size_t n = d.size();
  const ll dd = form(g, d, d);
  Mat m(n, Vec(n));
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    ll p = 2 * form(g, e, d);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = e[i] - (p / dd) * d[i];
  }
  return m;
}

/// Determinant by cofactor expansion (small matrices only).
inline ll det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  ll s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    s += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return s;
}

/// Every integer vector with coordinates in [-box, box].
template <class F>
void box(std::size_t n, ll bound, F&& visit) {
  Vec x(n, -bound);
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) return;
    ++x[i];
  }
}

inline bool primitive(const Vec& x) {
  ll g = 0;
  for (auto e : x) g = std::gcd(g, e < 0 ? -e : e);
  return g == 1;
}

inline bool crystallographic(const Mat& g, const Vec& d) {
  ll dd = form(g, d, d);
  if (dd <= 0) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Vec e(d.size(), 0);
    e[i] = 1;
    if ((2 * form(g, e, d)) % dd != 0) return false;
  }
  return true;
}

/// prod_{n>=1}(1-q^n)^e by literally multiplying |e| copies of each factor.
inline std::vector<ll> eta_naive(long e, std::size_t n) {
  std::vector<ll> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (long rep = 0; rep < (e < 0 ? -e : e); ++rep) {
      // factor (1 - q^k) or its inverse 1 + q^k + q^{2k} + ...
      std::vector<ll> f(n + 1, 0);
      f[0] = 1;
      if (e > 0) {
        f[k] = -1;
      } else {
        for (std::size_t j = k; j <= n; j += k) f[j] = 1;
      }
      std::vector<ll> r(n + 1, 0);
      for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; a + b <= n; ++b) r[a + b] += p[a] * f[b];
      p = r;
    }
  }
  return p;
}

/// Weyl group words of length <= max_len as matrices acting on simple-root
/// coordinates, keeping the shortest word for each distinct matrix.
struct WordElement {
  std::vector<std::size_t> word;
  Mat m;
};

inline std::vector<WordElement> weyl_words(const Mat& cartan, std::size_t max_len) {
  const std::size_t r = cartan.size();
  std::vector<Mat> s(r, identity(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s[i][i][j] = (i == j ? 1 : 0) - cartan[i][j];
  std::map<Mat, std::vector<std::size_t>> seen;
  std::vector<WordElement> frontier{{{}, identity(r)}};
  seen[identity(r)] = {};
  for (std::size_t len = 0; len < max_len; ++len) {
    std::vector<WordElement> next;
    for (const auto& e : frontier)
      for (std::size_t i = 0; i < r; ++i) {
        Mat m = mul(e.m, s[i]);
        if (seen.count(m)) continue;
        auto w = e.word;
        w.push_back(i);
        seen[m] = w;
        next.push_back({w, m});
      }
    frontier = next;
  }
  std::vector<WordElement> out;
  for (auto& [m, w] : seen) out.push_back({w, m});
  return out;
}

/// Expands prod (1 - x^beta)^{mult} over graded keys by repeated
/// multiplication with the single factor (1 - x^beta) or its inverse series.
using Key = std::vector<long>;
inline std::map<Key, ll> expand_product(const std::map<Key, ll>& mults, std::size_t r, int n) {
  auto height = [](const Key& k) {
    long h = 0;
    for (auto x : k) h += x;
    return h;
  };
  std::map<Key, ll> p{{Key(r, 0), 1}};
  for (const auto& [beta, m] : mults) {
    for (ll rep = 0; rep < (m < 0 ? -m : m); ++rep) {
      std::map<Key, ll> out;
      for (const auto& [k, c] : p) {
        Key cur = k;
        for (int j = 0;; ++j) {
          if (height(cur) > n) break;
          ll coef = m > 0 ? (j == 0 ? 1 : (j == 1 ? -1 : 0)) : 1;
          if (coef) out[cur] += coef * c;
          if (m > 0 && j == 1) break;
          for (std::size_t t = 0; t < r; ++t) cur[t] += beta[t];
        }
      }
      p.clear();
      for (auto& [k, c] : out)
        if (c) p[k] = c;
    }
  }
  return p;
}

}  // namespace oracle
