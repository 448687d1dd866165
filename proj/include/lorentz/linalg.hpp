#pragma once

// Exact linear algebra over Q and Z: elimination, kernels, solving,
// inertia of symmetric forms and the Smith normal form.

#include <optional>
#include <vector>

#include "lorentz/arith.hpp"

namespace lorentz::linalg {

/// Reduced row echelon form; pivot column of each nonzero row in `pivots`.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(std::span<const IntVec> vectors);

/// Basis of {x : m x = 0}, one vector per free column, in increasing order of
/// the free column.
std::vector<RatVec> kernel(const RatMatrix& m);

struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  RatVec particular;  // valid when consistent; free variables set to zero
};

LinearSolution solve(const RatMatrix& a, std::span<const Rational> b);

Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Numbers of positive, negative and zero squares of a symmetric form.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Congruence diagonalization with rational pivots. A zero pivot with a
/// nonzero off-diagonal entry is removed by adding row/column j to row/column
/// i (or, when both diagonal entries vanish, by the hyperbolic 2x2 block
/// split).
Inertia inertia(RatMatrix symmetric);

/// Nonzero invariant factors d1 | d2 | ... of an integer matrix, all positive.
std::vector<Integer> smith_invariants(IntMatrix m);

}  // namespace lorentz::linalg
