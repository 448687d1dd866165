#pragma once

// Fincke-Pohst enumeration of lattice points in ellipsoids, used to list
// roots of a hyperbolic lattice in slabs around a timelike vector.

#include <functional>

#include "lorentz/lattice.hpp"

namespace lorentz::enumeration {

/// Calls `visit` for every nonzero integer x with x^T q x <= bound, where q is
/// a positive definite integer matrix. Vectors are visited in a fixed order.
void short_vectors(const IntMatrix& q, const Rational& bound, const std::function<void(const IntVec&)>& visit);

/// Positive definite majorant of a hyperbolic form around a timelike h:
/// Q(x) = |S(h,h)| S(x,x) + 2 S(h,x)^2.
IntMatrix majorant(const Lattice& lattice, std::span<const Integer> h);

/// Every x with S(x,x) in [1, max_norm] and |S(h,x)| <= max_pairing.
std::vector<IntVec> slab_vectors(const Lattice& lattice, std::span<const Integer> h, const Integer& max_norm,
                                 const Integer& max_pairing);

}  // namespace lorentz::enumeration
