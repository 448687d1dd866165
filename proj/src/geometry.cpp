#include "lorentz/geometry.hpp"

namespace lorentz::geometry {

std::string_view name(VectorClass c) {
  switch (c) {
    case VectorClass::TimelikeInside: return "timelike-inside";
    case VectorClass::TimelikeOutside: return "timelike-outside";
    case VectorClass::LightlikeBoundary: return "lightlike-boundary";
    case VectorClass::LightlikeOpposite: return "lightlike-opposite";
    case VectorClass::Spacelike: return "spacelike";
    case VectorClass::Zero: return "zero";
  }
  return "?";
}

std::string_view name(MirrorRelation r) {
  switch (r) {
    case MirrorRelation::Intersecting: return "intersecting";
    case MirrorRelation::ParallelAtInfinity: return "parallel-at-infinity";
    case MirrorRelation::Ultraparallel: return "ultraparallel";
  }
  return "?";
}

VectorClass classify_vector(const Lattice& lattice, std::span<const Rational> x, std::span<const Rational> orient) {
  if (lattice.norm(orient) >= 0) throw DomainError("orientation vector must be timelike");
  if (is_zero(x)) return VectorClass::Zero;
  Rational n = lattice.norm(x);
  if (n > 0) return VectorClass::Spacelike;
  // Two nonzero vectors of the closed light cone lie in the same half iff
  // their pairing is negative (for a timelike orientation vector, nonzero).
  bool same = lattice.pair(x, orient) < 0;
  if (n < 0) return same ? VectorClass::TimelikeInside : VectorClass::TimelikeOutside;
  return same ? VectorClass::LightlikeBoundary : VectorClass::LightlikeOpposite;
}

Rational cosh2(const Lattice& lattice, std::span<const Rational> x, std::span<const Rational> y) {
  Rational nx = lattice.norm(x), ny = lattice.norm(y);
  if (nx >= 0 || ny >= 0) throw DomainError("cosh2 needs timelike vectors");
  Rational p = lattice.pair(x, y);
  if (p >= 0) throw DomainError("cosh2: vectors lie in opposite half-cones");
  return p * p / (nx * ny);
}

MirrorRelation classify_mirrors(const Lattice& lattice, std::span<const Integer> d1, std::span<const Integer> d2) {
  Integer n1 = lattice.norm(d1), n2 = lattice.norm(d2);
  if (n1 <= 0 || n2 <= 0) throw DomainError("wall vectors must have positive norm");
  Integer p = lattice.pair(d1, d2);
  Integer det = n1 * n2 - p * p;
  if (det > 0) return MirrorRelation::Intersecting;
  if (det == 0) return MirrorRelation::ParallelAtInfinity;
  return MirrorRelation::Ultraparallel;
}

HoroInvariants horo_invariants(const Lattice& lattice, std::span<const Integer> cusp, std::span<const Integer> d) {
  if (is_zero(cusp) || lattice.norm(cusp) != 0) throw DomainError("cusp vector must be nonzero isotropic");
  Integer nd = lattice.norm(d);
  if (nd <= 0) throw DomainError("wall vector must have positive norm");
  Integer p = lattice.pair(cusp, d);
  if (p == 0) throw DomainError("mirror " + to_string(d) + " passes through the cusp; theta is undefined");
  if (p > 0) throw DomainError("wall vector " + to_string(d) + " points towards the cusp (S(c,d) > 0)");
  HoroInvariants out;
  out.r_squared = Rational(Integer(p * p), nd);
  out.r_squared.canonicalize();
  if (nd == 2) {
    out.theta = Rational(Integer(-1), p);
    out.theta->canonicalize();
  }
  return out;
}

Rational theta_identity_check(const Rational& t1, const Rational& t2, const Rational& t12) {
  if (t1 <= 0 || t2 <= 0) throw DomainError("theta values must be positive");
  if (t12 < 0) throw DomainError("t12 must be nonnegative");
  return 4 * (t1 + t12) * (t2 + t12) / (t1 * t2) - 2;
}

}  // namespace lorentz::geometry
