#include "lorentz/vinberg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lorentz/cones.hpp"
#include "lorentz/enumeration.hpp"
#include "lorentz/linalg.hpp"

namespace lorentz::vinberg {

void RootFilter::validate(std::size_t rank) const {
  if (norms.empty()) throw DomainError("root filter needs at least one norm");
  for (const auto& n : norms)
    if (n <= 0) throw DomainError("root norms must be positive, got " + to_string(n));
  if (congruence) {
    const auto& m1 = congruence->sublattice;
    if (m1.rows() != rank || m1.cols() != rank) throw DimensionMismatch("congruence sublattice must be rank x rank");
    if (linalg::determinant(m1) == 0) throw DomainError("congruence sublattice has infinite index");
    for (const auto& r : congruence->residues)
      if (r.size() != rank) throw DimensionMismatch("congruence residue of wrong length");
  }
}

bool RootFilter::admits(std::span<const Integer> root) const {
  if (!congruence) return true;
  const RatMatrix basis = to_rational(congruence->sublattice);
  for (const auto& r : congruence->residues) {
    IntVec diff = sub(root, r);
    auto sol = linalg::solve(basis, to_rational(diff));
    if (sol.consistent && is_integral(sol.particular)) return true;
  }
  return false;
}

Rational HeightKey::value() const {
  Rational v(numerator, denominator);
  v.canonicalize();
  return v;
}

std::strong_ordering operator<=>(const HeightKey& a, const HeightKey& b) {
  Integer lhs = a.numerator * b.denominator;
  Integer rhs = b.numerator * a.denominator;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ControllerOnMirror::ControllerOnMirror(IntVec root)
    : DomainError("controller lies on the mirror of root " + to_string(root)), root_(std::move(root)) {}

std::vector<Candidate> enumerate_roots(const Lattice& lattice, std::span<const Integer> h, const RootFilter& filter,
                                       const HeightKey& max_key) {
  lattice.require_hyperbolic();
  filter.validate(lattice.rank());
  if (h.size() != lattice.rank()) throw DimensionMismatch("controller length differs from rank");
  const Integer hh = lattice.norm(h);
  if (hh >= 0) throw DomainError("controller " + to_string(h) + " is not timelike");
  if (max_key.denominator <= 0 || max_key.numerator < 0) throw DomainError("height bound must be nonnegative");

  // m = -S(h,d) satisfies m^2 <= key * d.
  Integer bound = 0;
  for (const auto& d : filter.norms) {
    Integer m = floor_sqrt(Rational(max_key.numerator * d, max_key.denominator));
    Integer b = -hh * d + 2 * m * m;
    if (b > bound) bound = b;
  }

  std::vector<Candidate> out;
  const IntMatrix q = enumeration::majorant(lattice, h);
  enumeration::short_vectors(q, Rational(bound), [&](const IntVec& x) {
    Integer n = lattice.norm(x);
    if (std::find(filter.norms.begin(), filter.norms.end(), n) == filter.norms.end()) return;
    Integer m = -lattice.pair(h, x);
    if (m < 0) return;
    if (m != 0 && m * m * max_key.denominator > max_key.numerator * n) return;
    if (!is_primitive(x) || !is_crystallographic(lattice, x) || !filter.admits(x)) return;
    if (m == 0) throw ControllerOnMirror(x);
    out.push_back({x, HeightKey{m * m, n}});
  });
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    auto c = a.key <=> b.key;
    if (c != 0) return c < 0;
    return a.root < b.root;
  });
  return out;
}

ChamberReport run(const Lattice& lattice, std::span<const Integer> h, const RootFilter& filter, const Limits& limits) {
  ChamberReport report;
  const HeightKey step_start{Integer(4), Integer(1)};
  HeightKey current = std::min(step_start, limits.max_key);
  std::optional<HeightKey> processed;  // every candidate with key <= processed has been seen

  auto finish = [&]() {
    report.gram = lattice.gram_of(report.accepted);
    return report;
  };

  while (true) {
    auto candidates = enumerate_roots(lattice, h, filter, current);
    for (const auto& c : candidates) {
      if (processed && c.key <= *processed) continue;
      if (report.accepted.size() >= limits.max_roots) {
        report.exhausted = true;
        return finish();
      }
      bool ok = true;
      for (const auto& a : report.accepted)
        if (lattice.pair(c.root, a) > 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      report.accepted.push_back(c.root);
      report.keys.push_back(c.key);
      if (report.accepted.size() >= lattice.rank() &&
          cones::is_arithmetic_type(lattice, report.accepted).finite_volume) {
        report.terminated = true;
        return finish();
      }
    }
    if (report.accepted.size() >= limits.max_roots) {
      report.exhausted = true;
      return finish();
    }
    if (current == limits.max_key) {
      report.exhausted = true;
      return finish();
    }
    processed = current;
    HeightKey doubled{current.numerator * 2, current.denominator};
    current = std::min(doubled, limits.max_key);
  }
}

bool pair_within_bound(const Integer& sij, const Integer& nii, const Integer& njj, bool strict) {
  const Integer prod = nii * njj;
  const Integer sq = sij * sij;
  if (sij > 0 && sq > prod) return false;  // below -2
  if (sij < 0) {
    // -2 sij / sqrt(prod) vs 62: 4 sij^2 vs 3844 prod
    Integer lhs = 4 * sq;
    Integer rhs = 3844 * prod;
    if (strict ? lhs >= rhs : lhs > rhs) return false;
  }
  return true;
}

GramBoundReport gram_bound_check(const Lattice& lattice, const RootSet& walls, bool strict) {
  GramBoundReport out;
  for (const auto& w : walls)
    if (lattice.norm(w) <= 0) throw DomainError("gram_bound_check: wall " + to_string(w) + " is not spacelike");
  const IntMatrix g = lattice.gram_of(walls);
  const std::size_t k = walls.size();
  std::vector<std::vector<bool>> ok(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!pair_within_bound(g(i, j), g(i, i), g(j, j), strict)) {
        ok[i][j] = ok[j][i] = false;
        out.violations.emplace_back(i, j);
      }

  const std::size_t r = lattice.rank();
  if (k < r) return out;
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
    if (pick.size() == r) {
      std::vector<IntVec> vecs;
      for (auto i : pick) vecs.push_back(walls[i]);
      if (linalg::rank(vecs) != r) return false;
      // connectivity of the Gram graph on the picked walls
      std::vector<bool> seen(r, false);
      std::vector<std::size_t> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        auto a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < r; ++b)
          if (!seen[b] && g(pick[a], pick[b]) != 0) {
            seen[b] = true;
            stack.push_back(b);
          }
      }
      return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
    }
    for (std::size_t i = from; i < k; ++i) {
      bool compatible = true;
      for (auto p : pick)
        if (!ok[p][i]) {
          compatible = false;
          break;
        }
      if (!compatible) continue;
      pick.push_back(i);
      if (choose(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (choose(0)) out.spanning_subset = pick;
  return out;
}

}  // namespace lorentz::vinberg
