#include "lorentz/weylstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lorentz/cones.hpp"
#include "lorentz/enumeration.hpp"
#include "lorentz/geometry.hpp"
#include "lorentz/linalg.hpp"

namespace lorentz::weyl {

std::string_view name(WeylKind k) {
  switch (k) {
    case WeylKind::Elliptic: return "elliptic";
    case WeylKind::Parabolic: return "parabolic";
    case WeylKind::None: return "none";
  }
  return "?";
}

std::string_view name(ChamberKind k) {
  switch (k) {
    case ChamberKind::Elliptic: return "elliptic";
    case ChamberKind::ParabolicCandidate: return "parabolic-candidate";
    case ChamberKind::Indefinite: return "indefinite";
  }
  return "?";
}

void validate_root_set(const Lattice& lattice, const RootSet& roots) {
  for (const auto& a : roots) {
    if (lattice.norm(a) <= 0) throw DomainError("root " + to_string(a) + " is not spacelike");
    if (!is_crystallographic(lattice, a)) throw DomainError("root " + to_string(a) + " is not crystallographic");
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (lattice.pair(roots[i], roots[j]) > 0)
        throw DomainError("roots " + to_string(roots[i]) + " and " + to_string(roots[j]) + " form an obtuse pair");
      std::vector<IntVec> two{roots[i], roots[j]};
      if (linalg::rank(two) < 2)
        throw DomainError("roots " + to_string(roots[i]) + " and " + to_string(roots[j]) + " are proportional");
    }
}

WeylData lattice_weyl_vector(const Lattice& lattice, const RootSet& roots) {
  if (roots.empty()) throw UnderDetermined("lattice_weyl_vector: empty root set");
  RatMatrix a(roots.size(), lattice.rank());
  RatVec b(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    IntVec p = lattice.pairings(roots[i]);
    for (std::size_t j = 0; j < lattice.rank(); ++j) a(i, j) = Rational(p[j]);
    b[i] = Rational(-lattice.norm(roots[i]), 2);
    b[i].canonicalize();
  }
  if (linalg::rank(a) < lattice.rank())
    throw UnderDetermined("lattice_weyl_vector: roots do not span the rational span of the lattice");
  auto sol = linalg::solve(a, b);
  WeylData out;
  if (!sol.consistent) return out;
  out.rho = sol.particular;
  out.rho_norm = lattice.norm(std::span<const Rational>(*out.rho));
  out.kind = out.rho_norm < 0 ? WeylKind::Elliptic : out.rho_norm == 0 ? WeylKind::Parabolic : WeylKind::None;
  return out;
}

bool generalized_weyl_check(const Lattice& lattice, const RootSet& roots, std::span<const Rational> rho,
                            const Rational& bound) {
  if (is_zero(rho)) throw DomainError("generalized_weyl_check: rho must be nonzero");
  for (const auto& a : roots) {
    RatVec ar = to_rational(a);
    Rational v = -lattice.pair(rho, std::span<const Rational>(ar));
    if (v < 0 || v > bound) return false;
  }
  return true;
}

std::vector<Integer> admissible_twists(const Lattice& lattice, std::span<const Integer> d) {
  if (!is_primitive(d)) throw DomainError("admissible_twists: " + to_string(d) + " is not primitive");
  Integer n = lattice.norm(d);
  if (n <= 0) throw DomainError("admissible_twists: " + to_string(d) + " is not spacelike");
  if (!is_crystallographic(lattice, d)) throw DomainError("admissible_twists: " + to_string(d) + " is not crystallographic");
  Integer two_a = 2 * a_delta(lattice, d);
  Integer m = two_a / n;  // exact: n | 2 S(d, e_i) for all i
  std::vector<Integer> out;
  for (Integer lam = 1; lam * lam <= m; ++lam)
    if (m % lam == 0) {
      out.push_back(lam);
      if (lam * lam != m) out.push_back(Integer(m / lam));
    }
  std::sort(out.begin(), out.end());
  const Integer exponent = invariants(lattice).exponent;
  for (const auto& lam : out)
    if ((4 * exponent * exponent) % (lam * lam * n) != 0)
      throw DomainError("twist " + to_string(lam) + " violates S(alpha,alpha) | 4 a(S)^2");
  return out;
}

bool m_star_p_membership(const Lattice& lattice, const RootSet& roots, std::span<const Rational> x) {
  if (!is_integral(lattice.pairings(x))) return false;
  for (const auto& a : roots) {
    RatVec ar = to_rational(a);
    Rational p = 2 * lattice.pair(x, std::span<const Rational>(ar));
    if (p.get_den() != 1) return false;
    Integer n = lattice.norm(a);
    if (n == 0 || p.get_num() % n != 0) return false;
  }
  return true;
}

std::vector<IntVec> candidate_roots_for_weyl_vector(const Lattice& lattice, std::span<const Rational> rho,
                                                    const Integer& norm_bound,
                                                    const std::optional<SearchWindow>& window) {
  if (rho.size() != lattice.rank()) throw DimensionMismatch("rho length differs from rank");
  if (is_zero(rho)) throw DomainError("rho must be nonzero");
  Rational rr = lattice.norm(rho);
  if (rr > 0) throw DomainError("rho is spacelike; the candidate set is not finite");
  if (norm_bound < 1) return {};

  std::vector<IntVec> pool;
  if (rr < 0) {
    Integer t = 1;
    for (const auto& v : rho) t = lcm(t, v.get_den());
    IntVec h = to_integer(scale(rho, Rational(t)));
    pool = enumeration::slab_vectors(lattice, h, norm_bound, Integer(t * norm_bound / 2));
  } else {
    if (!window)
      throw DomainError("isotropic rho describes infinitely many roots; a search window around a timelike vector is required");
    pool = enumeration::slab_vectors(lattice, window->aux, norm_bound, window->max_pairing);
  }

  std::vector<std::pair<Integer, IntVec>> found;
  for (auto& a : pool) {
    Integer n = lattice.norm(a);
    RatVec ar = to_rational(a);
    if (2 * lattice.pair(rho, std::span<const Rational>(ar)) != -n) continue;
    if (!is_crystallographic(lattice, a)) continue;
    found.emplace_back(n, std::move(a));
  }
  std::sort(found.begin(), found.end());
  std::vector<IntVec> out;
  for (auto& [n, a] : found) out.push_back(std::move(a));
  return out;
}

namespace {

std::vector<std::size_t> compose(const std::vector<std::size_t>& g, const std::vector<std::size_t>& h) {
  std::vector<std::size_t> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
  return out;
}

std::set<std::vector<std::size_t>> closure(const std::vector<std::vector<std::size_t>>& gens, std::size_t n) {
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

IntVec normalize_sign(IntVec v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace

SymmetryGroup symmetry_group(const Lattice& lattice, const RootSet& roots) {
  const std::size_t k = roots.size();
  const std::size_t n = lattice.rank();
  if (linalg::rank(roots) < n) throw UnderDetermined("symmetry_group: roots do not span; isometries are not determined");

  std::vector<std::size_t> basis;
  {
    std::vector<IntVec> chosen;
    for (std::size_t i = 0; i < k && basis.size() < n; ++i) {
      chosen.push_back(roots[i]);
      if (linalg::rank(chosen) == chosen.size())
        basis.push_back(i);
      else
        chosen.pop_back();
    }
  }
  RatMatrix source(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) source(i, j) = Rational(roots[basis[j]][i]);
  const RatMatrix source_inv = *linalg::inverse(source);
  const IntMatrix g = lattice.gram_of(roots);

  SymmetryGroup out;
  std::vector<std::size_t> perm(k);
  std::vector<bool> used(k, false);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == k) {
      RatMatrix target(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) target(r, j) = Rational(roots[perm[basis[j]]][r]);
      RatMatrix m = target * source_inv;
      if (!is_integral(m)) return;
      Isometry iso{to_integer(m)};
      for (std::size_t a = 0; a < k; ++a)
        if (iso(roots[a]) != roots[perm[a]]) return;
      if (!is_isometry(lattice, iso)) return;
      out.elements.push_back({iso, perm});
      return;
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c] || g(c, c) != g(i, i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (g(perm[j], c) != g(j, i)) ok = false;
      if (!ok) continue;
      used[c] = true;
      perm[i] = c;
      assign(i + 1);
      used[c] = false;
    }
  };
  assign(0);
  std::sort(out.elements.begin(), out.elements.end(),
            [](const SymmetryElement& a, const SymmetryElement& b) { return a.permutation < b.permutation; });
  out.order = out.elements.size();

  std::vector<std::vector<std::size_t>> gen_perms;
  std::set<std::vector<std::size_t>> reached = closure(gen_perms, k);
  for (const auto& e : out.elements) {
    if (reached.count(e.permutation)) continue;
    gen_perms.push_back(e.permutation);
    out.generators.push_back(e.isometry);
    reached = closure(gen_perms, k);
  }
  return out;
}

std::optional<IntVec> fixed_isotropic(const Lattice& lattice, std::span<const Isometry> generators) {
  const std::size_t n = lattice.rank();
  for (const auto& g : generators)
    if (!is_isometry(lattice, g)) throw DomainError("fixed_isotropic: generator is not an isometry");
  RatMatrix stacked(generators.size() * n, n);
  for (std::size_t t = 0; t < generators.size(); ++t)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked(t * n + i, j) = Rational(generators[t].matrix(i, j) - (i == j ? 1 : 0));
  std::vector<RatVec> ker;
  if (generators.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      RatVec e(n);
      e[i] = 1;
      ker.push_back(e);
    }
  } else {
    ker = linalg::kernel(stacked);
  }
  if (ker.size() > 2)
    throw Indeterminate("fixed space has dimension " + std::to_string(ker.size()) + " (> 2)");
  if (ker.empty()) return std::nullopt;
  if (ker.size() == 1) {
    IntVec v = primitive_on_ray(ker[0]);
    if (lattice.norm(v) != 0) return std::nullopt;
    return normalize_sign(v);
  }
  IntVec u = primitive_on_ray(ker[0]), v = primitive_on_ray(ker[1]);
  Integer a = lattice.norm(u), b = lattice.pair(u, v), c = lattice.norm(v);
  if (a == 0) return normalize_sign(u);
  if (c == 0) return normalize_sign(v);
  Integer disc = b * b - a * c;
  if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return std::nullopt;
  Integer s = sqrt(disc);
  // a p^2 + 2 b p q + c q^2 = 0 at p/q = (-b + s)/a
  Integer p = -b + s, q = a;
  IntVec w = add(scale(u, p), scale(v, q));
  return normalize_sign(primitive_part(w));
}

bool is_unipotent(const Isometry& g) {
  const std::size_t n = g.matrix.rows();
  IntMatrix n_mat = g.matrix - IntMatrix::identity(n);
  if (n_mat.is_zero()) return false;
  IntMatrix power = n_mat;
  for (std::size_t i = 1; i < n; ++i) power = power * n_mat;
  return power.is_zero();
}

Isometry parabolic_translation(const Lattice& lattice, std::span<const Integer> da, std::span<const Integer> db) {
  if (geometry::classify_mirrors(lattice, da, db) != geometry::MirrorRelation::ParallelAtInfinity)
    throw DomainError("mirrors of " + to_string(da) + " and " + to_string(db) + " are not parallel at infinity");
  return reflection(lattice, db) * reflection(lattice, da);
}

PkSample build_pk_sample(const Lattice& lattice, const Isometry& phi, std::span<const Integer> e0,
                         std::span<const Integer> f01, std::span<const Integer> f02, long k, long window) {
  if (k < 2) throw DomainError("build_pk_sample: k must be at least 2");
  if (window < 0) throw DomainError("build_pk_sample: window must be nonnegative");
  if (!is_isometry(lattice, phi)) throw DomainError("build_pk_sample: phi is not an isometry");
  if (!is_unipotent(phi)) throw DomainError("build_pk_sample: phi is not a nontrivial unipotent isometry");

  const Isometry phi_inv = inverse(phi);
  const std::vector<IntVec> seeds{IntVec(e0.begin(), e0.end()), IntVec(f01.begin(), f01.end()),
                                  IntVec(f02.begin(), f02.end())};
  PkSample out;
  for (long t = -window; t <= window; ++t) {
    Isometry power = Isometry::identity(lattice.rank());
    const Isometry& step = t < 0 ? phi_inv : phi;
    for (long s = 0; s < (t < 0 ? -t : t); ++s) power = step * power;
    auto push = [&](int which) {
      out.roots.push_back(power(seeds[static_cast<std::size_t>(which)]));
      out.shift.push_back(t);
      out.seed.push_back(which);
    };
    if (t % k != 0) {
      push(0);
    } else {
      push(1);
      push(2);
    }
  }

  out.acceptable = std::all_of(out.roots.begin(), out.roots.end(), [&](const IntVec& a) {
    return lattice.norm(a) > 0 && is_crystallographic(lattice, a);
  });

  try {
    WeylData wd = lattice_weyl_vector(lattice, seeds);
    out.rho = wd.rho;
  } catch (const UnderDetermined&) {
  }
  if (out.rho) {
    out.weyl_property = std::all_of(out.roots.begin(), out.roots.end(), [&](const IntVec& a) {
      RatVec ar = to_rational(a);
      return 2 * lattice.pair(std::span<const Rational>(*out.rho), std::span<const Rational>(ar)) == -lattice.norm(a);
    });
  }

  out.non_obtuse = true;
  for (std::size_t i = 0; i < out.roots.size() && out.non_obtuse; ++i)
    for (std::size_t j = i + 1; j < out.roots.size(); ++j)
      if (lattice.pair(out.roots[i], out.roots[j]) > 0) {
        out.non_obtuse = false;
        out.offending = std::make_pair(i, j);
        break;
      }
  return out;
}

ChamberClass classify_chamber(const Lattice& lattice, const RootSet& roots, const SymmetryGroup& sym) {
  ChamberClass out;
  if (!roots.empty() && cones::is_arithmetic_type(lattice, roots).finite_volume) {
    out.kind = ChamberKind::Elliptic;
    return out;
  }
  for (const auto& g : sym.generators) {
    if (!is_unipotent(g)) continue;
    std::optional<IntVec> c;
    try {
      std::vector<Isometry> one{g};
      c = fixed_isotropic(lattice, one);
    } catch (const Indeterminate&) {
      continue;
    }
    if (!c) continue;
    for (int sign : {1, -1}) {
      IntVec cand = scale(*c, Integer(sign));
      bool ok = std::all_of(roots.begin(), roots.end(), [&](const IntVec& a) { return lattice.pair(cand, a) <= 0; });
      if (ok) {
        out.kind = ChamberKind::ParabolicCandidate;
        out.cusp = cand;
        return out;
      }
    }
  }
  return out;
}

}  // namespace lorentz::weyl
