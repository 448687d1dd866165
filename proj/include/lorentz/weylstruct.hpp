#pragma once

// Lattice Weyl vectors, twisting coefficients, chamber symmetries, cusps and
// parabolic translations, and the elliptic / parabolic classification of
// chambers.

#include <optional>
#include <string_view>
#include <utility>

#include "lorentz/lattice.hpp"

namespace lorentz::weyl {

class UnderDetermined : public DomainError {
 public:
  using DomainError::DomainError;
};

class Indeterminate : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class WeylKind { Elliptic, Parabolic, None };
std::string_view name(WeylKind k);

struct WeylData {
  std::optional<RatVec> rho;
  Rational rho_norm;
  WeylKind kind = WeylKind::None;
};

/// Throws DomainError unless every root is spacelike and crystallographic,
/// pairwise non-obtuse and no two are proportional.
void validate_root_set(const Lattice& lattice, const RootSet& roots);

/// Solves S(rho, alpha) = -S(alpha,alpha)/2 for all alpha. A non-spanning set
/// raises UnderDetermined; an inconsistent system yields kind None.
WeylData lattice_weyl_vector(const Lattice& lattice, const RootSet& roots);

/// 0 <= -S(rho, alpha) <= bound for every alpha.
bool generalized_weyl_check(const Lattice& lattice, const RootSet& roots, std::span<const Rational> rho,
                            const Rational& bound);

/// All lambda with lambda S(d,d) | 2 a(d).
std::vector<Integer> admissible_twists(const Lattice& lattice, std::span<const Integer> d);

/// x in M^* and S(alpha,alpha) | 2 S(x,alpha) for every alpha.
bool m_star_p_membership(const Lattice& lattice, const RootSet& roots, std::span<const Rational> x);

/// Extra bound needed for isotropic rho, where the Weyl-vector condition
/// alone describes an infinite set: |S(aux, alpha)| <= max_pairing for a
/// timelike aux.
struct SearchWindow {
  IntVec aux;
  Integer max_pairing;
};

/// {alpha : 0 < S(alpha,alpha) <= norm_bound, crystallographic,
///  S(rho,alpha) = -S(alpha,alpha)/2}, sorted by norm then lexicographically.
std::vector<IntVec> candidate_roots_for_weyl_vector(const Lattice& lattice, std::span<const Rational> rho,
                                                    const Integer& norm_bound,
                                                    const std::optional<SearchWindow>& window = std::nullopt);

struct SymmetryElement {
  Isometry isometry;
  std::vector<std::size_t> permutation;  // alpha_i -> alpha_{permutation[i]}
};

struct SymmetryGroup {
  std::vector<Isometry> generators;
  /// Group order, absent for an infinite candidate group given by generators.
  std::optional<std::size_t> order;
  /// All elements when the group was enumerated (identity first).
  std::vector<SymmetryElement> elements;
};

/// Gram-preserving permutations of a spanning root set that are induced by
/// integral isometries of the lattice.
SymmetryGroup symmetry_group(const Lattice& lattice, const RootSet& roots);

/// Primitive isotropic vector in the common fixed space of the generators,
/// decided exactly when that space has dimension <= 2 (first nonzero
/// coordinate positive). Larger fixed spaces raise Indeterminate.
std::optional<IntVec> fixed_isotropic(const Lattice& lattice, std::span<const Isometry> generators);

bool is_unipotent(const Isometry& g);

/// s_b o s_a for two walls whose mirrors meet at infinity.
Isometry parabolic_translation(const Lattice& lattice, std::span<const Integer> da, std::span<const Integer> db);

struct PkSample {
  RootSet roots;
  std::vector<long> shift;                      // t with root = phi^t(seed)
  std::vector<int> seed;                        // 0 = e0, 1 = f01, 2 = f02
  bool acceptable = false;                      // all crystallographic
  std::optional<RatVec> rho;                    // Weyl vector of the seeds
  bool weyl_property = false;                   // S(rho,a) = -S(a,a)/2 on the sample
  bool non_obtuse = false;
  std::optional<std::pair<std::size_t, std::size_t>> offending;  // first obtuse pair
};

/// Finite window of the acceptable set
///   {phi^t(e0) : t != 0 mod k} u {phi^t(f01), phi^t(f02) : t = 0 mod k}, |t| <= window.
PkSample build_pk_sample(const Lattice& lattice, const Isometry& phi, std::span<const Integer> e0,
                         std::span<const Integer> f01, std::span<const Integer> f02, long k, long window);

enum class ChamberKind { Elliptic, ParabolicCandidate, Indefinite };
std::string_view name(ChamberKind k);

struct ChamberClass {
  ChamberKind kind = ChamberKind::Indefinite;
  std::optional<IntVec> cusp;
};

/// Elliptic when the walls cut out a finite-volume chamber; parabolic
/// candidate when some symmetry is a nontrivial unipotent isometry fixing an
/// isotropic c with S(c, alpha) <= 0 for all walls. The finite-index
/// condition of a genuine parabolic group is not certified.
ChamberClass classify_chamber(const Lattice& lattice, const RootSet& roots, const SymmetryGroup& sym);

}  // namespace lorentz::weyl
