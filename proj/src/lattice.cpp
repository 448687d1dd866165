#include "lorentz/lattice.hpp"

#include <algorithm>

#include "lorentz/linalg.hpp"

namespace lorentz {

RatVec Isometry::operator()(std::span<const Rational> x) const { return to_rational(matrix).apply(x); }

Lattice::Lattice(IntMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  if (!gram_.square() || gram_.rows() == 0) throw DimensionMismatch("Gram matrix must be square and nonempty");
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw DomainError("Gram matrix is not symmetric");
  if (linalg::determinant(gram_) == 0) throw DegenerateForm("Gram matrix is degenerate");
}

Integer Lattice::pair(std::span<const Integer> x, std::span<const Integer> y) const {
  if (x.size() != rank() || y.size() != rank()) throw DimensionMismatch("pair: vector length differs from rank");
  return dot(x, pairings(y));
}

Rational Lattice::pair(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != rank() || y.size() != rank()) throw DimensionMismatch("pair: vector length differs from rank");
  return dot(x, pairings(y));
}

IntVec Lattice::pairings(std::span<const Integer> x) const {
  if (x.size() != rank()) throw DimensionMismatch("pairings: vector length differs from rank");
  return gram_.apply(x);
}

RatVec Lattice::pairings(std::span<const Rational> x) const {
  if (x.size() != rank()) throw DimensionMismatch("pairings: vector length differs from rank");
  RatVec out(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) out[i] += gram_(i, j) * x[j];
  return out;
}

IntMatrix Lattice::gram_of(std::span<const IntVec> vectors) const {
  IntMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    IntVec pi = pairings(vectors[i]);
    for (std::size_t j = 0; j < vectors.size(); ++j) g(i, j) = dot(pi, vectors[j]);
  }
  return g;
}

Signature Lattice::signature() const {
  auto in = linalg::inertia(to_rational(gram_));
  return {in.positive, in.negative};
}

void Lattice::require_hyperbolic() const {
  Signature s = signature();
  if (s.negative != 1 || s.positive + 1 != rank())
    throw DegenerateForm("form is not hyperbolic: signature (" + std::to_string(s.positive) + "," +
                         std::to_string(s.negative) + ")");
}

LatticeInvariants invariants(const Lattice& lattice) {
  LatticeInvariants inv;
  inv.signature = lattice.signature();
  inv.even = true;
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (lattice.gram()(i, i) % 2 != 0) inv.even = false;
  inv.determinant = linalg::determinant(lattice.gram());
  inv.smith_divisors = linalg::smith_invariants(lattice.gram());
  inv.exponent = inv.smith_divisors.empty() ? Integer(1) : inv.smith_divisors.back();
  return inv;
}

Integer a_delta(const Lattice& lattice, std::span<const Integer> d) {
  if (d.size() != lattice.rank()) throw DimensionMismatch("a_delta: vector length differs from rank");
  if (is_zero(d)) throw DomainError("a_delta: zero vector");
  if (!is_primitive(d)) throw DomainError("a_delta: vector " + to_string(d) + " is not primitive");
  return gcd_of(lattice.pairings(d));
}

bool is_crystallographic(const Lattice& lattice, std::span<const Integer> d) {
  Integer n = lattice.norm(d);
  if (n <= 0) throw DomainError("crystallographic test needs positive norm, got " + to_string(n));
  for (const auto& p : lattice.pairings(d))
    if ((2 * p) % n != 0) return false;
  return true;
}

IntVec reflect(const Lattice& lattice, std::span<const Integer> d, std::span<const Integer> x) {
  Integer n = lattice.norm(d);
  if (n <= 0) throw DomainError("reflection needs a positive-norm vector");
  Integer num = 2 * lattice.pair(x, d);
  if (num % n != 0) throw DomainError("reflection in " + to_string(d) + " does not preserve the lattice");
  Integer c = num / n;
  IntVec out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * d[i];
  return out;
}

RatVec reflect(const Lattice& lattice, std::span<const Integer> d, std::span<const Rational> x) {
  Integer n = lattice.norm(d);
  if (n <= 0) throw DomainError("reflection needs a positive-norm vector");
  RatVec dr = to_rational(d);
  Rational c = 2 * lattice.pair(x, std::span<const Rational>(dr)) / n;
  RatVec out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * dr[i];
  return out;
}

Isometry reflection(const Lattice& lattice, std::span<const Integer> d) {
  if (d.size() != lattice.rank()) throw DimensionMismatch("reflection: vector length differs from rank");
  Integer n = lattice.norm(d);
  if (n <= 0) throw DomainError("reflection needs a positive-norm vector, norm is " + to_string(n));
  if (!is_crystallographic(lattice, d))
    throw DomainError("vector " + to_string(d) + " is not crystallographic");
  IntVec p = lattice.pairings(d);
  IntMatrix m = IntMatrix::identity(lattice.rank());
  // column j = e_j - (2 S(e_j,d)/n) d
  for (std::size_t j = 0; j < lattice.rank(); ++j) {
    Integer c = 2 * p[j] / n;
    for (std::size_t i = 0; i < lattice.rank(); ++i) m(i, j) -= c * d[i];
  }
  return {m};
}

bool is_isometry(const Lattice& lattice, const Isometry& g) {
  const auto& m = g.matrix;
  if (!m.square() || m.rows() != lattice.rank()) throw DimensionMismatch("is_isometry: matrix size differs from rank");
  if (!(m.transpose() * lattice.gram() * m == lattice.gram())) return false;
  Integer det = linalg::determinant(m);
  return det == 1 || det == -1;
}

Isometry inverse(const Isometry& g) {
  auto inv = linalg::inverse(to_rational(g.matrix));
  if (!inv) throw DomainError("isometry matrix is singular");
  return {to_integer(*inv)};
}

}  // namespace lorentz
