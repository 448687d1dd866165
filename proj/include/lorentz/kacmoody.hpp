#pragma once

// Root systems of the Kac-Moody algebras attached to chambers: generalized
// Cartan matrices, real and imaginary roots, Weyl group elements graded by
// w(rho) - rho, and the Weyl-Kac denominator identity
//
//   prod_{alpha > 0} (1 - e^{-alpha})^{mult alpha} = sum_w det(w) e^{-(w rho - rho)}
//
// truncated by height (sum of simple-root coefficients). Exponents are kept
// as coefficient tuples over the simple roots; rho itself is never needed to
// grade the sum side.

#include <map>
#include <optional>

#include "lorentz/lattice.hpp"
#include "lorentz/weylstruct.hpp"

namespace lorentz::km {

/// Coefficients over the simple roots.
using RootCoeffs = std::vector<long>;

struct CartanMatrix {
  IntMatrix a;                // a_ij = 2 S(ai,aj) / S(ai,ai)
  std::vector<Rational> d;    // D = diag(2 / S(ai,ai))
  IntMatrix b;                // Gram matrix of the simple roots
  bool indecomposable = false;
  bool lorentzian = false;    // b has exactly one negative square
};

struct CartanOptions {
  /// Reject decomposable or non-hyperbolic Gram data.
  bool require_lorentzian = true;
};

CartanMatrix cartan(const Lattice& lattice, const RootSet& simple_roots, const CartanOptions& options = {});

struct RootDatum {
  Lattice lattice;
  RootSet simple_roots;
  CartanMatrix cartan;
  weyl::WeylData weyl_data;
  /// h with S(h, alpha_i) < 0 for all simple roots, when one exists.
  std::optional<IntVec> interior;

  std::size_t rank() const { return simple_roots.size(); }
  /// Lattice vector sum c_i alpha_i.
  IntVec to_lattice(const RootCoeffs& c) const;
};

RootDatum make_root_datum(const Lattice& lattice, const RootSet& simple_roots, const CartanOptions& options = {});

int height(const RootCoeffs& c);
/// s_i in simple-root coordinates: c - <c, alpha_i^vee> e_i.
RootCoeffs reflect(const CartanMatrix& cartan, std::size_t i, const RootCoeffs& c);
bool is_positive(const RootCoeffs& c);

/// Formal sum of e^{-beta} over beta in Q+ with integer coefficients, kept up
/// to a height truncation. Zero coefficients are not stored.
struct GradedSeries {
  std::size_t rank = 0;
  int truncation = 0;
  std::map<RootCoeffs, Integer> terms;

  Integer coefficient(const RootCoeffs& key) const;
  void add(const RootCoeffs& key, const Integer& value);
  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;
};

struct RealRoot {
  RootCoeffs coeffs;
  IntVec vector;
  int height = 0;
};

/// Positive real roots of height <= max_height, by height then coefficients.
std::vector<RealRoot> real_roots(const RootDatum& datum, int max_height);

struct WeylElement {
  std::vector<std::size_t> word;  // lexicographically smallest reduced word
  Isometry matrix;                // product of the word's reflections on M
  RootCoeffs inversion_exponent;  // w(rho) - rho: sum of the inversion set
  int sign = 1;                   // (-1)^length
};

/// Every w whose exponent has height <= max_height, ordered by exponent
/// height, then exponent, then word; increasing the bound only appends.
std::vector<WeylElement> weyl_elements(const RootDatum& datum, int max_height);

GradedSeries sum_side(const RootDatum& datum, int max_height);
GradedSeries sum_side(std::span<const WeylElement> elements, std::size_t rank, int max_height);

/// Truncated expansion of prod (1 - e^{-beta})^{mult beta}.
GradedSeries product_side(const std::map<RootCoeffs, Integer>& mults, std::size_t rank, int max_height);

class InconsistentIdentity : public DomainError {
 public:
  InconsistentIdentity(RootCoeffs component, Integer residual);
  const RootCoeffs& component() const { return component_; }
  const Integer& residual() const { return residual_; }

 private:
  RootCoeffs component_;
  Integer residual_;
};

struct MultiplicityTable {
  /// Multiplicity of every candidate root of height <= truncation (real roots
  /// and W-translates of K); zero entries are kept for solved candidates.
  std::map<RootCoeffs, Integer> mults;
  std::map<RootCoeffs, bool> real;
  bool residual_zero = false;
  int truncation = 0;
};

/// Imaginary root candidates: W-orbits of K = Q+ n Q+^* inside the truncation.
std::vector<RootCoeffs> imaginary_candidates(const RootDatum& datum, int max_height);

/// Solves the denominator identity degree by degree for the multiplicities.
MultiplicityTable solve_multiplicities(const RootDatum& datum, int max_height);

/// mult(s_i beta) = mult(beta) whenever both lie in the truncation.
bool check_w_invariance(const RootDatum& datum, const MultiplicityTable& table);

/// The set {(w(rho), det w)} restricted to the truncation is mapped to
/// itself by each simple reflection with the sign flipped. Needs rho.
bool anti_invariance_check(const RootDatum& datum, int max_height);
bool anti_invariance_check(const RootDatum& datum, std::span<const WeylElement> elements, int max_height);

/// Smallest n <= n_max with n x in W(K), or absent. x must be timelike
/// (isotropic too when allow_isotropic).
std::optional<long> imaginary_membership(const RootDatum& datum, std::span<const Integer> x, long n_max,
                                         bool allow_isotropic = false);

/// Gram matrix of S + U(k) with U(k)(e1,e2) = -k, basis M then e1, e2.
Lattice extended_lattice(const Lattice& lattice, long k);

/// omega = z + (S(z,z)/2) e1 + (1/k) e2; checks S'(omega,omega) = 0 and
/// S'(omega,e1) = -1 exactly.
RatVec cusp_embedding(const Lattice& lattice, long k, std::span<const Rational> z);

}  // namespace lorentz::km
