#pragma once

// Exact polyhedral cones: double description, the arithmetic-type
// criterion for chambers and the integral cone Q+ = sum Z+ alpha.

#include <cstdint>
#include <optional>

#include "lorentz/lattice.hpp"

namespace lorentz::cones {

/// Generator description of a cone: extreme rays modulo the lineality space.
/// Rays are primitive, pairwise non-proportional and sorted lexicographically;
/// when the lineality space is nontrivial they are taken in its Euclidean
/// orthogonal complement so the output is canonical.
struct Generators {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

/// {x in Q^dim : n . x <= 0 for every normal n} by incremental double
/// description. Adjacency of a ray pair is decided by the rank of the
/// constraints tight on both.
Generators extreme_rays(std::span<const IntVec> normals, std::size_t dim);

/// Chamber cone {x : S(x, alpha) <= 0 for alpha in P} in both descriptions.
struct Cone {
  RootSet walls;
  Generators generators;
};

Cone dual_extreme_rays(const Lattice& lattice, const RootSet& walls);

struct ArithmeticType {
  bool arithmetic = false;
  bool finite_volume = false;
  /// Spacelike vector of the chamber cone when the test fails (a lineality
  /// vector if no small spacelike combination exists).
  std::optional<IntVec> witness;
};

/// The chamber cone lies in the closure of one half of the light cone: it is
/// pointed and every extreme ray r has S(r,r) <= 0, with S(r,r') <= 0 pairwise.
ArithmeticType is_arithmetic_type(const Lattice& lattice, const RootSet& walls);

/// Vector h with S(h, alpha) < 0 for every wall, if the chamber cone has
/// nonempty interior.
std::optional<IntVec> interior_vector(const Lattice& lattice, const RootSet& walls);

/// Nonnegative integers a with sum a_i walls[i] = x, searched by branch and
/// bound against an interior vector. Absent when no such tuple exists or the
/// node budget runs out.
std::optional<IntVec> q_plus_membership(const Lattice& lattice, const RootSet& walls, std::span<const Integer> x,
                                        std::uint64_t node_budget = 1'000'000);

/// Nonzero x = sum a_i walls[i] with a_i >= 0, sum a_i <= max_height and
/// S(x, alpha) <= 0 for every wall. Sorted by height, then lexicographically.
std::vector<IntVec> k_elements(const Lattice& lattice, const RootSet& walls, int max_height);

}  // namespace lorentz::cones
