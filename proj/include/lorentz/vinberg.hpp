#pragma once

// Vinberg's algorithm for the fundamental chamber of a reflection group of a
// hyperbolic lattice containing a fixed timelike controller h.
//
// Candidate roots are processed in order of the height -2 S(h,d)/sqrt(S(d,d)).
// Heights are compared through the exact key S(h,d)^2 / S(d,d); square roots
// never appear.

#include <compare>
#include <optional>
#include <utility>

#include "lorentz/lattice.hpp"

namespace lorentz::vinberg {

/// Roots whose residue class mod a finite-index sublattice M1 lies in a
/// given finite set.
struct Congruence {
  /// Columns form a basis of M1 (coordinates in M).
  IntMatrix sublattice;
  /// Representatives of the allowed classes in M/M1.
  std::vector<IntVec> residues;
};

struct RootFilter {
  std::vector<Integer> norms;
  std::optional<Congruence> congruence;

  void validate(std::size_t rank) const;
  bool admits(std::span<const Integer> root) const;  // congruence part only
};

/// Exact squared height S(h,d)^2 / S(d,d) as an unreduced fraction.
struct HeightKey {
  Integer numerator;
  Integer denominator = 1;

  Rational value() const;
  friend std::strong_ordering operator<=>(const HeightKey& a, const HeightKey& b);
  friend bool operator==(const HeightKey& a, const HeightKey& b) { return (a <=> b) == 0; }
};

struct Candidate {
  IntVec root;
  HeightKey key;
};

/// Raised when a root satisfying the filter is orthogonal to the controller.
class ControllerOnMirror : public DomainError {
 public:
  ControllerOnMirror(IntVec root);
  const IntVec& root() const { return root_; }

 private:
  IntVec root_;
};

/// Every primitive crystallographic d with S(d,d) in the norm set, residue
/// admitted by the filter, S(h,d) < 0 and key <= max_key. Sorted by key, then
/// lexicographically.
std::vector<Candidate> enumerate_roots(const Lattice& lattice, std::span<const Integer> h, const RootFilter& filter,
                                       const HeightKey& max_key);

struct Limits {
  HeightKey max_key{Integer(1024), Integer(1)};
  std::size_t max_roots = 64;
};

struct ChamberReport {
  RootSet accepted;
  std::vector<HeightKey> keys;
  bool terminated = false;
  bool exhausted = false;
  IntMatrix gram;
};

ChamberReport run(const Lattice& lattice, std::span<const Integer> h, const RootFilter& filter, const Limits& limits);

struct GramBoundReport {
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  /// Indices of rank-many linearly independent walls with connected Gram
  /// graph whose pairs all satisfy the bound, when such a subset exists.
  std::optional<std::vector<std::size_t>> spanning_subset;
};

/// Checks -2 <= -2 S(di,dj)/sqrt(S(di,di) S(dj,dj)) < 62 (<= 62 unless strict)
/// for every pair, using the squared comparison 4 S(di,dj)^2 vs 62^2 S(di,di) S(dj,dj).
GramBoundReport gram_bound_check(const Lattice& lattice, const RootSet& walls, bool strict);

/// The same pair test on raw Gram data.
bool pair_within_bound(const Integer& sij, const Integer& nii, const Integer& njj, bool strict);

}  // namespace lorentz::vinberg
