#include "lorentz/enumeration.hpp"

namespace lorentz::enumeration {

void short_vectors(const IntMatrix& q, const Rational& bound, const std::function<void(const IntVec&)>& visit) {
  const std::size_t n = q.rows();
  if (!q.square() || n == 0) throw DimensionMismatch("short_vectors: need a nonempty square matrix");

  // q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
  std::vector<Rational> d(n);
  RatMatrix mu(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational di = q(i, i);
    for (std::size_t k = 0; k < i; ++k) di -= d[k] * mu(k, i) * mu(k, i);
    if (di <= 0) throw DomainError("short_vectors: form is not positive definite");
    d[i] = di;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v = q(i, j);
      for (std::size_t k = 0; k < i; ++k) v -= d[k] * mu(k, i) * mu(k, j);
      mu(i, j) = v / di;
    }
  }

  IntVec x(n);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t i, const Rational& budget) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= mu(i, j) * x[j];
    Integer radius = floor_sqrt(budget / d[i]) + 1;
    Integer lo = floor_of(center) - radius;
    Integer hi = ceil_of(center) + radius;
    for (Integer v = lo; v <= hi; ++v) {
      Rational off = Rational(v) - center;
      Rational used = d[i] * off * off;
      if (used > budget) continue;
      x[i] = v;
      if (i == 0) {
        if (!is_zero(x)) visit(x);
      } else {
        descend(i - 1, budget - used);
      }
    }
    x[i] = 0;
  };
  if (bound >= 0) descend(n - 1, bound);
}

IntMatrix majorant(const Lattice& lattice, std::span<const Integer> h) {
  Integer hh = lattice.norm(h);
  if (hh >= 0) throw DomainError("majorant: vector " + to_string(h) + " is not timelike");
  IntVec gh = lattice.pairings(h);
  const std::size_t n = lattice.rank();
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = -hh * lattice.gram()(i, j) + 2 * gh[i] * gh[j];
  return q;
}

std::vector<IntVec> slab_vectors(const Lattice& lattice, std::span<const Integer> h, const Integer& max_norm,
                                 const Integer& max_pairing) {
  std::vector<IntVec> out;
  if (max_norm < 1 || max_pairing < 0) return out;
  IntMatrix q = majorant(lattice, h);
  Integer hh = -lattice.norm(h);
  Rational bound = Rational(hh * max_norm + 2 * max_pairing * max_pairing);
  short_vectors(q, bound, [&](const IntVec& x) {
    Integer n = lattice.norm(x);
    if (n < 1 || n > max_norm) return;
    if (abs(lattice.pair(h, x)) > max_pairing) return;
    out.push_back(x);
  });
  return out;
}

}  // namespace lorentz::enumeration
