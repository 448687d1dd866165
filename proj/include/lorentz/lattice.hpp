#pragma once

// Integral symmetric bilinear forms S on M = Z^n, their invariants,
// reflections and the crystallographic condition.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/arith.hpp"

namespace lorentz {

/// Ordered list of lattice vectors, typically wall vectors of a chamber.
using RootSet = std::vector<IntVec>;

class DegenerateForm : public DomainError {
 public:
  using DomainError::DomainError;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct LatticeInvariants {
  Signature signature;
  bool even = false;
  Integer determinant;
  /// Invariant factors of the Gram matrix; their product is |determinant|.
  std::vector<Integer> smith_divisors;
  /// Exponent a(S) of the discriminant group M^*/M (largest divisor).
  Integer exponent;
};

/// Elements of O(S) are stored as the integer matrix whose columns are the
/// images of the basis vectors.
struct Isometry {
  IntMatrix matrix;

  static Isometry identity(std::size_t n) { return {IntMatrix::identity(n)}; }
  IntVec operator()(std::span<const Integer> x) const { return matrix.apply(x); }
  RatVec operator()(std::span<const Rational> x) const;
  friend Isometry operator*(const Isometry& a, const Isometry& b) { return {a.matrix * b.matrix}; }
  friend bool operator==(const Isometry&, const Isometry&) = default;
};

/// Nondegenerate integral symmetric bilinear form given by its Gram matrix.
/// Symmetry and nondegeneracy are checked on construction; the signature is
/// only inspected by operations that need a hyperbolic form.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram, std::string name = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }

  Integer pair(std::span<const Integer> x, std::span<const Integer> y) const;
  Rational pair(std::span<const Rational> x, std::span<const Rational> y) const;
  Integer norm(std::span<const Integer> x) const { return pair(x, x); }
  Rational norm(std::span<const Rational> x) const { return pair(x, x); }

  /// Pairings S(x, e_i) with the basis vectors, i.e. gram * x.
  IntVec pairings(std::span<const Integer> x) const;
  RatVec pairings(std::span<const Rational> x) const;

  /// Gram matrix of a list of vectors.
  IntMatrix gram_of(std::span<const IntVec> vectors) const;

  /// Throws DegenerateForm unless the signature is (rank-1, 1).
  void require_hyperbolic() const;
  Signature signature() const;

 private:
  IntMatrix gram_;
  std::string name_;
};

LatticeInvariants invariants(const Lattice& lattice);

/// Largest a with d/a in M^*: gcd of |S(d, e_i)|. Requires primitive nonzero d.
Integer a_delta(const Lattice& lattice, std::span<const Integer> d);

/// S(d,d) > 0 and S(d,d) | 2 S(e_i, d) for every basis vector.
bool is_crystallographic(const Lattice& lattice, std::span<const Integer> d);

/// Matrix of x -> x - 2 S(x,d)/S(d,d) d.
Isometry reflection(const Lattice& lattice, std::span<const Integer> d);

bool is_isometry(const Lattice& lattice, const Isometry& g);

/// Integer inverse of an isometry (det = +-1 guarantees integrality).
Isometry inverse(const Isometry& g);

/// Reflection images of vectors without materializing the matrix.
IntVec reflect(const Lattice& lattice, std::span<const Integer> d, std::span<const Integer> x);
RatVec reflect(const Lattice& lattice, std::span<const Integer> d, std::span<const Rational> x);

}  // namespace lorentz
