#include "lorentz/cones.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lorentz/linalg.hpp"

namespace lorentz::cones {

namespace {

struct Ray {
  IntVec v;
  std::vector<bool> tight;  // per processed constraint
};

std::size_t tight_rank(std::span<const IntVec> normals, const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<IntVec> rows;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) rows.push_back(normals[k]);
  return linalg::rank(rows);
}

IntVec combine(const Integer& ca, std::span<const Integer> a, const Integer& cb, std::span<const Integer> b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return primitive_part(out);
}

// Euclidean projection onto the orthogonal complement of span(basis).
RatVec project_out(std::span<const Integer> v, const std::vector<IntVec>& basis) {
  RatVec x = to_rational(v);
  if (basis.empty()) return x;
  const std::size_t k = basis.size();
  RatMatrix gram(k, k);
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = Rational(dot(basis[i], basis[j]));
    rhs[i] = Rational(dot(basis[i], v));
  }
  auto sol = linalg::solve(gram, rhs);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < x.size(); ++c) x[c] -= sol.particular[i] * basis[i][c];
  return x;
}

}  // namespace

Generators extreme_rays(std::span<const IntVec> normals, std::size_t dim) {
  for (const auto& n : normals)
    if (n.size() != dim) throw DimensionMismatch("extreme_rays: normal of wrong length");

  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < normals.size(); ++k) {
    const IntVec& a = normals[k];
    for (auto& r : rays) r.tight.push_back(false);

    std::size_t l0 = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        l0 = i;
        break;
      }

    if (l0 < lin.size()) {
      const IntVec pivot = lin[l0];
      const Integer s = dot(a, pivot);
      const Integer sabs = abs(s);
      const Integer sgn = s > 0 ? 1 : -1;
      std::vector<IntVec> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == l0) continue;
        next_lin.push_back(combine(s, lin[i], -dot(a, lin[i]), pivot));
      }
      for (auto& r : rays) {
        r.v = combine(sabs, r.v, -sgn * dot(a, r.v), pivot);
        r.tight.back() = true;
      }
      Ray fresh{negate(pivot), std::vector<bool>(k + 1, true)};
      if (s < 0) fresh.v = pivot;
      fresh.tight.back() = false;
      rays.push_back(std::move(fresh));
      lin = std::move(next_lin);
      continue;
    }

    std::vector<Ray> pos, neg, next;
    std::vector<Integer> pos_val, neg_val;
    for (auto& r : rays) {
      Integer v = dot(a, r.v);
      if (v > 0) {
        pos_val.push_back(v);
        pos.push_back(std::move(r));
      } else if (v < 0) {
        neg_val.push_back(v);
        neg.push_back(std::move(r));
      } else {
        r.tight.back() = true;
        next.push_back(std::move(r));
      }
    }
    const std::size_t target = dim - lin.size();
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t j = 0; j < neg.size(); ++j) {
        if (target < 2 || tight_rank(normals, pos[i].tight, neg[j].tight) != target - 2) continue;
        Ray r;
        r.v = combine(pos_val[i], neg[j].v, -neg_val[j], pos[i].v);
        r.tight.resize(k + 1);
        for (std::size_t t = 0; t < k; ++t) r.tight[t] = pos[i].tight[t] && neg[j].tight[t];
        r.tight.back() = true;
        next.push_back(std::move(r));
      }
    for (auto& r : neg) next.push_back(std::move(r));
    rays = std::move(next);
  }

  Generators out;
  if (!lin.empty()) {
    RatMatrix m(normals.size(), dim);
    for (std::size_t i = 0; i < normals.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = Rational(normals[i][j]);
    for (const auto& v : linalg::kernel(m)) out.lineality.push_back(primitive_on_ray(v));
  }
  for (const auto& r : rays) {
    IntVec v = out.lineality.empty() ? primitive_part(r.v) : primitive_on_ray(project_out(r.v, out.lineality));
    if (is_zero(v)) continue;
    out.rays.push_back(std::move(v));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

Cone dual_extreme_rays(const Lattice& lattice, const RootSet& walls) {
  if (walls.empty()) throw DomainError("dual_extreme_rays: empty wall set");
  std::vector<IntVec> normals;
  for (const auto& w : walls) normals.push_back(lattice.pairings(w));
  return {walls, extreme_rays(normals, lattice.rank())};
}

ArithmeticType is_arithmetic_type(const Lattice& lattice, const RootSet& walls) {
  Cone cone = dual_extreme_rays(lattice, walls);
  ArithmeticType out;
  const auto& g = cone.generators;
  if (!g.lineality.empty()) {
    // The cone contains the whole lineality space, so any spacelike vector
    // of lineality + rays certifies the failure. Small combinations suffice.
    out.witness = g.lineality.front();
    std::vector<IntVec> pool = g.lineality;
    pool.insert(pool.end(), g.rays.begin(), g.rays.end());
    const std::size_t nl = g.lineality.size();
    IntVec coeff(pool.size());
    for (long bound = 1; bound <= 4; ++bound) {
      std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == pool.size()) {
          IntVec x(lattice.rank());
          for (std::size_t k = 0; k < pool.size(); ++k)
            if (coeff[k] != 0) x = add(x, scale(pool[k], coeff[k]));
          if (is_zero(x) || lattice.norm(x) <= 0) return false;
          out.witness = primitive_part(x);
          return true;
        }
        const long lo = i < nl ? -bound : 0;
        for (long a = lo; a <= bound; ++a) {
          coeff[i] = a;
          if (rec(i + 1)) return true;
        }
        return false;
      };
      if (rec(0)) break;
    }
    return out;
  }
  if (g.rays.empty()) return out;
  for (const auto& r : g.rays)
    if (lattice.norm(r) > 0) {
      out.witness = r;
      return out;
    }
  for (std::size_t i = 0; i < g.rays.size(); ++i)
    for (std::size_t j = i + 1; j < g.rays.size(); ++j)
      if (lattice.pair(g.rays[i], g.rays[j]) > 0) {
        // Rays in opposite half-cones: their sum is spacelike.
        out.witness = primitive_part(add(g.rays[i], g.rays[j]));
        return out;
      }
  out.arithmetic = true;
  out.finite_volume = true;
  return out;
}

std::optional<IntVec> interior_vector(const Lattice& lattice, const RootSet& walls) {
  Cone cone = dual_extreme_rays(lattice, walls);
  if (cone.generators.rays.empty()) return std::nullopt;
  IntVec h(lattice.rank());
  for (const auto& r : cone.generators.rays) h = add(h, r);
  for (const auto& w : walls)
    if (lattice.pair(h, w) >= 0) return std::nullopt;
  return primitive_part(h);
}

std::optional<IntVec> q_plus_membership(const Lattice& lattice, const RootSet& walls, std::span<const Integer> x,
                                        std::uint64_t node_budget) {
  if (x.size() != lattice.rank()) throw DimensionMismatch("q_plus_membership: vector length differs from rank");
  const std::size_t k = walls.size();
  if (is_zero(x)) return IntVec(k);
  if (k == 0) return std::nullopt;

  // Fast path for linearly independent walls: the coefficients are unique.
  auto solve_suffix = [&](std::size_t from, std::span<const Integer> target) -> std::optional<IntVec> {
    RatMatrix a(lattice.rank(), k - from);
    for (std::size_t j = from; j < k; ++j)
      for (std::size_t i = 0; i < lattice.rank(); ++i) a(i, j - from) = Rational(walls[j][i]);
    RatVec b = to_rational(target);
    auto sol = linalg::solve(a, b);
    if (!sol.consistent || !is_integral(sol.particular)) return std::nullopt;
    for (const auto& v : sol.particular)
      if (v < 0) return std::nullopt;
    return to_integer(sol.particular);
  };

  std::vector<bool> suffix_independent(k + 1, true);
  for (std::size_t from = 0; from < k; ++from) {
    std::vector<IntVec> suffix(walls.begin() + static_cast<std::ptrdiff_t>(from), walls.end());
    suffix_independent[from] = linalg::rank(suffix) == suffix.size();
  }
  if (suffix_independent[0]) return solve_suffix(0, x);

  auto h = interior_vector(lattice, walls);
  if (!h) return std::nullopt;
  std::vector<Integer> weight(k);
  for (std::size_t i = 0; i < k; ++i) weight[i] = -lattice.pair(*h, walls[i]);
  const Integer total = -lattice.pair(*h, x);
  if (total < 0) return std::nullopt;

  std::uint64_t nodes = 0;
  IntVec coeffs(k);
  std::function<bool(std::size_t, const IntVec&, const Integer&)> search =
      [&](std::size_t j, const IntVec& rest, const Integer& budget) -> bool {
    if (++nodes > node_budget) return false;
    if (suffix_independent[j]) {
      auto tail = solve_suffix(j, rest);
      if (!tail) return false;
      for (std::size_t i = j; i < k; ++i) coeffs[i] = (*tail)[i - j];
      return true;
    }
    Integer top = floor_div(budget, weight[j]);
    for (Integer a = 0; a <= top; ++a) {
      coeffs[j] = a;
      IntVec next = sub(rest, scale(walls[j], a));
      if (search(j + 1, next, budget - a * weight[j])) return true;
      if (nodes > node_budget) return false;
    }
    return false;
  };
  if (search(0, IntVec(x.begin(), x.end()), total)) return coeffs;
  return std::nullopt;
}

std::vector<IntVec> k_elements(const Lattice& lattice, const RootSet& walls, int max_height) {
  std::vector<std::pair<int, IntVec>> found;
  const std::size_t k = walls.size();
  if (max_height <= 0 || k == 0) return {};
  std::vector<IntVec> normals;
  for (const auto& w : walls) normals.push_back(lattice.pairings(w));
  std::vector<int> a(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == k) {
      int height = max_height - left;
      if (height == 0) return;
      IntVec x(lattice.rank());
      for (std::size_t j = 0; j < k; ++j)
        if (a[j]) x = add(x, scale(walls[j], Integer(a[j])));
      if (is_zero(x)) return;
      for (const auto& n : normals)
        if (dot(n, x) > 0) return;
      found.emplace_back(height, std::move(x));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[i] = v;
      rec(i + 1, left - v);
    }
    a[i] = 0;
  };
  rec(0, max_height);
  std::sort(found.begin(), found.end());
  std::vector<IntVec> out;
  for (auto& [h, x] : found)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  return out;
}

}  // namespace lorentz::cones
