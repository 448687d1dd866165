#pragma once

// Light-cone classification and exact hyperbolic invariants. Distances and
// horosphere data are kept in squared or rational form, never as square roots.

#include <optional>
#include <string_view>

#include "lorentz/lattice.hpp"

namespace lorentz::geometry {

enum class VectorClass {
  TimelikeInside,   // S(x,x) < 0, same half-cone as the orientation vector
  TimelikeOutside,  // S(x,x) < 0, opposite half-cone
  LightlikeBoundary,
  LightlikeOpposite,
  Spacelike,
  Zero,
};

enum class MirrorRelation { Intersecting, ParallelAtInfinity, Ultraparallel };

std::string_view name(VectorClass c);
std::string_view name(MirrorRelation r);

VectorClass classify_vector(const Lattice& lattice, std::span<const Rational> x, std::span<const Rational> orient);

/// cosh^2 of the hyperbolic distance between two timelike rays in one
/// half-cone: S(x,y)^2 / (S(x,x) S(y,y)).
Rational cosh2(const Lattice& lattice, std::span<const Rational> x, std::span<const Rational> y);

/// Sign of the determinant of the 2x2 Gram matrix of two wall vectors.
MirrorRelation classify_mirrors(const Lattice& lattice, std::span<const Integer> d1, std::span<const Integer> d2);

struct HoroInvariants {
  /// -1/S(c,d); only defined for norm-2 walls.
  std::optional<Rational> theta;
  /// S(c,d)^2 / S(d,d): square of the horosphere-touching invariant.
  Rational r_squared;
};

HoroInvariants horo_invariants(const Lattice& lattice, std::span<const Integer> cusp, std::span<const Integer> d);

/// Predicted -S(e1,e2) for two norm-2 walls with angles t1, t2 and minimal
/// common touching angle t12: 4 (t1+t12)(t2+t12) / (t1 t2) - 2.
Rational theta_identity_check(const Rational& t1, const Rational& t2, const Rational& t12);

}  // namespace lorentz::geometry
