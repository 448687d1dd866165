#pragma once

// Truncated one-variable integer power series and the cusp identity
//
//   1 - sum_{t>0} m(t) q^t = prod_{k>0} (1 - q^k)^{tau(k)}
//
// along an isotropic ray a0. tau(k) here is the exponent attached to k a0.
// The Ramanujan function is a different object: q prod (1-q^n)^24 =
// sum tau_R(n) q^n, so tau_R(n) is coefficient n-1 of eta_power(24, N).

#include "lorentz/arith.hpp"

namespace lorentz::qs {

class PowerSeries {
 public:
  PowerSeries() = default;
  /// Zero series with coefficients c_0..c_n.
  explicit PowerSeries(std::size_t n);
  PowerSeries(std::vector<Integer> coeffs);

  static PowerSeries one(std::size_t n);

  std::size_t truncation() const { return c_.size() - 1; }
  const std::vector<Integer>& coefficients() const { return c_; }
  const Integer& operator[](std::size_t i) const { return c_.at(i); }
  Integer& operator[](std::size_t i) { return c_.at(i); }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// Inverse of a series with constant term +-1.
  PowerSeries inverse() const;
  /// Integer power; negative exponents need a unit constant term.
  PowerSeries pow(long e) const;

 private:
  std::vector<Integer> c_{Integer(0)};
};

/// prod_{n>=1} (1 - q^n)^e up to q^N.
PowerSeries eta_power(long e, std::size_t n);

/// Ramanujan tau(1..n) read off q prod (1-q^k)^24.
std::vector<Integer> ramanujan_tau(std::size_t n);

enum class Direction { TauToM, MToTau };

/// Coefficient lists are indexed from t = 1: input[0] is the value at 1.
/// Returns values at 1..n; the input must have at least n entries.
std::vector<Integer> cusp_identity(Direction direction, std::span<const Integer> input, std::size_t n);

struct RayEntry {
  long multiple = 0;   // t in t a0
  Integer multiplicity;
  friend bool operator==(const RayEntry&, const RayEntry&) = default;
};

/// Imaginary simple roots of the corrected algebra on the ray of a0.
struct RayMultiset {
  IntVec a0;
  std::vector<RayEntry> entries;
};

/// {(t, tau(t)) : 1 <= t <= n, tau(t) != 0}.
RayMultiset build_H_ray(std::span<const Integer> tau, std::span<const Integer> a0, std::size_t n);

/// prod (1-q^k)^{tau(k)} = 1 - sum m(t) q^t up to q^n.
bool corrected_denominator_ray_check(std::span<const Integer> tau, std::span<const Integer> m, std::size_t n);

}  // namespace lorentz::qs
