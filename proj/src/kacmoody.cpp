#include "lorentz/kacmoody.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "lorentz/cones.hpp"
#include "lorentz/linalg.hpp"

namespace lorentz::km {

namespace {

bool connected(const IntMatrix& a, const std::vector<std::size_t>& support) {
  if (support.empty()) return false;
  std::vector<bool> seen(support.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < support.size(); ++v)
      if (!seen[v] && a(support[u], support[v]) != 0) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == support.size();
}

RootCoeffs plus(const RootCoeffs& a, const RootCoeffs& b) {
  RootCoeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RootCoeffs unit(std::size_t r, std::size_t i) {
  RootCoeffs out(r, 0);
  out[i] = 1;
  return out;
}

// Every nonzero tuple in Z+^r with height <= n, ordered by height then lex.
std::vector<RootCoeffs> graded_tuples(std::size_t r, int n) {
  std::vector<RootCoeffs> out;
  RootCoeffs cur(r, 0);
  for (int h = 1; h <= n; ++h) {
    std::function<void(std::size_t, int)> fill = [&](std::size_t pos, int left) {
      if (pos + 1 == r) {
        cur[pos] = left;
        out.push_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[pos] = v;
        fill(pos + 1, left - v);
      }
    };
    std::size_t first = out.size();
    fill(0, h);
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  }
  return out;
}

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw DomainError("root coefficient out of range: " + to_string(v));
  return v.get_si();
}

}  // namespace

CartanMatrix cartan(const Lattice& lattice, const RootSet& simple_roots, const CartanOptions& options) {
  const std::size_t r = simple_roots.size();
  if (r == 0) throw DomainError("cartan: empty root set");
  for (const auto& a : simple_roots) {
    if (a.size() != lattice.rank()) throw DimensionMismatch("cartan: root length differs from rank");
    if (!is_crystallographic(lattice, a))
      throw DomainError("cartan: " + to_string(a) + " is not a crystallographic root");
  }
  CartanMatrix out;
  out.b = lattice.gram_of(simple_roots);
  out.a = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    out.d.push_back(Rational(Integer(2), out.b(i, i)));
    out.d.back().canonicalize();
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && out.b(i, j) > 0)
        throw DomainError("cartan: roots " + std::to_string(i) + " and " + std::to_string(j) + " are obtuse");
      out.a(i, j) = 2 * out.b(i, j) / out.b(i, i);
    }
  }
  std::vector<std::size_t> all(r);
  for (std::size_t i = 0; i < r; ++i) all[i] = i;
  out.indecomposable = connected(out.a, all);
  out.lorentzian = linalg::inertia(to_rational(out.b)).negative == 1;
  if (options.require_lorentzian) {
    if (!out.indecomposable) throw DomainError("cartan: Cartan matrix is decomposable");
    if (!out.lorentzian) throw DomainError("cartan: Gram matrix of the roots is not Lorentzian");
  }
  return out;
}

IntVec RootDatum::to_lattice(const RootCoeffs& c) const {
  if (c.size() != simple_roots.size()) throw DimensionMismatch("root coefficients of wrong length");
  IntVec out(lattice.rank());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out = add(out, scale(simple_roots[i], Integer(c[i])));
  return out;
}

RootDatum make_root_datum(const Lattice& lattice, const RootSet& simple_roots, const CartanOptions& options) {
  RootDatum out{lattice, simple_roots, cartan(lattice, simple_roots, options), {}, std::nullopt};
  try {
    out.weyl_data = weyl::lattice_weyl_vector(lattice, simple_roots);
  } catch (const weyl::UnderDetermined&) {
  }
  if (out.weyl_data.rho && !is_zero(std::span<const Rational>(*out.weyl_data.rho)))
    out.interior = primitive_on_ray(*out.weyl_data.rho);
  else
    out.interior = cones::interior_vector(lattice, simple_roots);
  return out;
}

int height(const RootCoeffs& c) {
  long h = 0;
  for (auto v : c) h += v;
  return static_cast<int>(h);
}

RootCoeffs reflect(const CartanMatrix& cartan, std::size_t i, const RootCoeffs& c) {
  Integer p = 0;
  for (std::size_t j = 0; j < c.size(); ++j) p += cartan.a(i, j) * c[j];
  RootCoeffs out = c;
  out[i] = to_long(Integer(c[i] - p));
  return out;
}

bool is_positive(const RootCoeffs& c) {
  bool nonzero = false;
  for (auto v : c) {
    if (v < 0) return false;
    if (v > 0) nonzero = true;
  }
  return nonzero;
}

Integer GradedSeries::coefficient(const RootCoeffs& key) const {
  auto it = terms.find(key);
  return it == terms.end() ? Integer(0) : it->second;
}

void GradedSeries::add(const RootCoeffs& key, const Integer& value) {
  if (value == 0) return;
  auto [it, inserted] = terms.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms.erase(it);
  }
}

std::vector<RealRoot> real_roots(const RootDatum& datum, int max_height) {
  const std::size_t r = datum.rank();
  std::set<RootCoeffs> seen;
  std::deque<RootCoeffs> queue;
  if (max_height >= 1)
    for (std::size_t i = 0; i < r; ++i) {
      seen.insert(unit(r, i));
      queue.push_back(unit(r, i));
    }
  while (!queue.empty()) {
    RootCoeffs b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      RootCoeffs c = reflect(datum.cartan, i, b);
      if (!is_positive(c) || height(c) > max_height || seen.count(c)) continue;
      seen.insert(c);
      queue.push_back(c);
    }
  }
  std::vector<RealRoot> out;
  for (const auto& c : seen) out.push_back({c, datum.to_lattice(c), height(c)});
  std::stable_sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  });
  return out;
}

std::vector<WeylElement> weyl_elements(const RootDatum& datum, int max_height) {
  const std::size_t r = datum.rank();
  const std::size_t n = datum.lattice.rank();
  std::vector<Isometry> refl;
  for (const auto& a : datum.simple_roots) refl.push_back(reflection(datum.lattice, a));

  // State: element with its action on simple-root coordinates (columns w(alpha_j)).
  struct State {
    WeylElement elem;
    IntMatrix roots;
  };
  std::vector<WeylElement> out;
  if (max_height < 0) return out;
  std::vector<State> layer;
  layer.push_back({WeylElement{{}, Isometry::identity(n), RootCoeffs(r, 0), 1}, IntMatrix::identity(r)});
  std::set<std::vector<Integer>> seen;
  seen.insert(layer.front().roots.data());

  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [](const State& a, const State& b) { return a.elem.word < b.elem.word; });
    std::vector<State> next;
    for (const auto& s : layer) {
      out.push_back(s.elem);
      for (std::size_t i = 0; i < r; ++i) {
        RootCoeffs wi(r);
        bool positive = true;
        for (std::size_t k = 0; k < r; ++k) {
          if (s.roots(k, i) < 0) positive = false;
          wi[k] = positive ? to_long(s.roots(k, i)) : 0;
        }
        if (!positive) continue;
        RootCoeffs exp = plus(s.elem.inversion_exponent, wi);
        if (height(exp) > max_height) continue;
        IntMatrix roots(r, r);
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k) roots(k, j) = s.roots(k, j) - datum.cartan.a(i, j) * s.roots(k, i);
        if (!seen.insert(roots.data()).second) continue;
        WeylElement e;
        e.word = s.elem.word;
        e.word.push_back(i);
        e.matrix = s.elem.matrix * refl[i];
        e.inversion_exponent = std::move(exp);
        e.sign = -s.elem.sign;
        next.push_back({std::move(e), std::move(roots)});
      }
    }
    layer = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    int ha = height(a.inversion_exponent), hb = height(b.inversion_exponent);
    if (ha != hb) return ha < hb;
    if (a.inversion_exponent != b.inversion_exponent) return a.inversion_exponent < b.inversion_exponent;
    return a.word < b.word;
  });
  return out;
}

GradedSeries sum_side(std::span<const WeylElement> elements, std::size_t rank, int max_height) {
  GradedSeries s{rank, max_height, {}};
  for (const auto& e : elements)
    if (height(e.inversion_exponent) <= max_height) s.add(e.inversion_exponent, Integer(e.sign));
  return s;
}

GradedSeries sum_side(const RootDatum& datum, int max_height) {
  auto elems = weyl_elements(datum, max_height);
  return sum_side(elems, datum.rank(), max_height);
}

namespace {

// p *= (1 - e^{-beta})^m, truncated.
void multiply_factor(GradedSeries& p, const RootCoeffs& beta, const Integer& m) {
  if (m == 0) return;
  const int hb = height(beta);
  const int n = p.truncation;
  std::vector<Integer> c{Integer(1)};
  for (int j = 1; j * hb <= n; ++j) {
    Integer b;
    if (m > 0) {
      if (m < j) break;
      mpz_bin_ui(b.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(j));
      if (j % 2) b = -b;
    } else {
      Integer top = -m + j - 1;
      mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(j));
    }
    c.push_back(b);
  }
  GradedSeries out{p.rank, p.truncation, {}};
  for (const auto& [key, v] : p.terms) {
    RootCoeffs k = key;
    const int hk = height(key);
    for (std::size_t j = 0; j < c.size() && hk + static_cast<int>(j) * hb <= n; ++j) {
      out.add(k, v * c[j]);
      k = plus(k, beta);
    }
  }
  p = std::move(out);
}

GradedSeries one(std::size_t rank, int n) {
  GradedSeries p{rank, n, {}};
  p.add(RootCoeffs(rank, 0), Integer(1));
  return p;
}

}  // namespace

GradedSeries product_side(const std::map<RootCoeffs, Integer>& mults, std::size_t rank, int max_height) {
  GradedSeries p = one(rank, max_height);
  for (const auto& [beta, m] : mults) {
    if (beta.size() != rank) throw DimensionMismatch("product_side: root of wrong length");
    if (!is_positive(beta)) throw DomainError("product_side: root coefficients must be positive");
    if (height(beta) <= max_height) multiply_factor(p, beta, m);
  }
  return p;
}

InconsistentIdentity::InconsistentIdentity(RootCoeffs component, Integer residual)
    : DomainError("denominator identity fails at component " + [&] {
        IntVec v;
        for (auto x : component) v.push_back(Integer(x));
        return to_string(v);
      }() + " (residual " + to_string(residual) + ")"),
      component_(std::move(component)),
      residual_(std::move(residual)) {}

std::vector<RootCoeffs> imaginary_candidates(const RootDatum& datum, int max_height) {
  const std::size_t r = datum.rank();
  std::set<RootCoeffs> seen;
  std::deque<RootCoeffs> queue;
  for (const auto& c : graded_tuples(r, max_height)) {
    bool in_dual = true;
    for (std::size_t i = 0; i < r && in_dual; ++i) {
      Integer p = 0;
      for (std::size_t j = 0; j < r; ++j) p += datum.cartan.a(i, j) * c[j];
      if (p > 0) in_dual = false;
    }
    if (!in_dual) continue;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < r; ++i)
      if (c[i] != 0) support.push_back(i);
    if (!connected(datum.cartan.a, support)) continue;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    RootCoeffs b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      RootCoeffs c = reflect(datum.cartan, i, b);
      if (!is_positive(c) || height(c) > max_height || seen.count(c)) continue;
      seen.insert(c);
      queue.push_back(c);
    }
  }
  std::vector<RootCoeffs> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const RootCoeffs& a, const RootCoeffs& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a < b;
  });
  return out;
}

MultiplicityTable solve_multiplicities(const RootDatum& datum, int max_height) {
  const std::size_t r = datum.rank();
  MultiplicityTable table;
  table.truncation = max_height;
  std::set<RootCoeffs> real, imag;
  for (const auto& rr : real_roots(datum, max_height)) real.insert(rr.coeffs);
  for (const auto& c : imaginary_candidates(datum, max_height)) imag.insert(c);

  const GradedSeries target = sum_side(datum, max_height);
  GradedSeries p = one(r, max_height);
  for (const auto& beta : graded_tuples(r, max_height)) {
    Integer m = p.coefficient(beta) - target.coefficient(beta);
    const bool is_real = real.count(beta) > 0;
    if (is_real || imag.count(beta)) {
      table.mults[beta] = m;
      table.real[beta] = is_real;
      multiply_factor(p, beta, m);
    } else if (m != 0) {
      throw InconsistentIdentity(beta, m);
    }
  }
  GradedSeries check = product_side(table.mults, r, max_height);
  table.residual_zero = check.terms == target.terms;
  if (!table.residual_zero) {
    for (const auto& beta : graded_tuples(r, max_height)) {
      Integer d = check.coefficient(beta) - target.coefficient(beta);
      if (d != 0) throw InconsistentIdentity(beta, d);
    }
  }
  return table;
}

bool check_w_invariance(const RootDatum& datum, const MultiplicityTable& table) {
  auto mult = [&](const RootCoeffs& b) {
    auto it = table.mults.find(b);
    return it == table.mults.end() ? Integer(0) : it->second;
  };
  for (const auto& [beta, m] : table.mults)
    for (std::size_t i = 0; i < datum.rank(); ++i) {
      if (beta == unit(datum.rank(), i)) continue;
      RootCoeffs g = reflect(datum.cartan, i, beta);
      if (!is_positive(g) || height(g) > table.truncation) continue;
      if (mult(g) != m) return false;
    }
  return true;
}

bool anti_invariance_check(const RootDatum& datum, std::span<const WeylElement> elements, int max_height) {
  if (!datum.weyl_data.rho) throw DomainError("anti_invariance_check: the chamber has no Weyl vector");
  const RatVec& rho = *datum.weyl_data.rho;
  const std::size_t r = datum.rank();
  std::map<RootCoeffs, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (height(elements[k].inversion_exponent) <= max_height) index.emplace(elements[k].inversion_exponent, k);

  for (const auto& [exp, k] : index) {
    const WeylElement& e = elements[k];
    const RatVec wrho = e.matrix(std::span<const Rational>(rho));
    // w rho - rho must be the recorded exponent (s_i rho = rho + alpha_i)
    RatVec diff = wrho;
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= rho[j];
    if (diff != to_rational(datum.to_lattice(exp))) return false;
    for (std::size_t i = 0; i < r; ++i) {
      const RatVec image = reflect(datum.lattice, datum.simple_roots[i], std::span<const Rational>(wrho));
      // s_i w rho - rho = alpha_i + s_i(w rho - rho) in root coordinates
      RootCoeffs target = reflect(datum.cartan, i, exp);
      target[i] += 1;
      if (height(target) > max_height) continue;
      auto it = index.find(target);
      if (it == index.end()) return false;
      const WeylElement& f = elements[it->second];
      if (f.sign != -e.sign) return false;
      if (f.matrix(std::span<const Rational>(rho)) != image) return false;
    }
  }
  return true;
}

bool anti_invariance_check(const RootDatum& datum, int max_height) {
  auto elems = weyl_elements(datum, max_height);
  return anti_invariance_check(datum, elems, max_height);
}

std::optional<long> imaginary_membership(const RootDatum& datum, std::span<const Integer> x, long n_max,
                                         bool allow_isotropic) {
  const Lattice& lat = datum.lattice;
  if (x.size() != lat.rank()) throw DimensionMismatch("imaginary_membership: vector length differs from rank");
  if (is_zero(x)) throw DomainError("imaginary_membership: zero vector");
  const Integer xx = lat.norm(x);
  if (xx > 0 || (xx == 0 && !allow_isotropic))
    throw DomainError("imaginary_membership: " + to_string(x) + " is not timelike");
  if (!datum.interior) throw DomainError("imaginary_membership: chamber has empty interior");
  if (lat.pair(*datum.interior, x) >= 0) return std::nullopt;

  // Reflections commute with scaling, so reduce x once.
  IntVec y(x.begin(), x.end());
  const std::uint64_t budget = 1'000'000;
  for (std::uint64_t step = 0;; ++step) {
    if (step >= budget) throw DomainError("imaginary_membership: reduction did not terminate");
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < datum.rank(); ++i)
      if (lat.pair(y, datum.simple_roots[i]) > 0) {
        hit = i;
        break;
      }
    if (!hit) break;
    y = lorentz::reflect(lat, datum.simple_roots[*hit], y);
    if (lat.pair(*datum.interior, y) >= 0) return std::nullopt;
  }
  for (long n = 1; n <= n_max; ++n)
    if (cones::q_plus_membership(lat, datum.simple_roots, scale(y, Integer(n)))) return n;
  return std::nullopt;
}

Lattice extended_lattice(const Lattice& lattice, long k) {
  if (k <= 0) throw DomainError("extended_lattice: k must be positive");
  const std::size_t n = lattice.rank();
  IntMatrix g(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = lattice.gram()(i, j);
  g(n, n + 1) = g(n + 1, n) = -k;
  return Lattice(g, lattice.name().empty() ? std::string() : lattice.name() + "+U(" + std::to_string(k) + ")");
}

RatVec cusp_embedding(const Lattice& lattice, long k, std::span<const Rational> z) {
  if (z.size() != lattice.rank()) throw DimensionMismatch("cusp_embedding: vector length differs from rank");
  if (k <= 0) throw DomainError("cusp_embedding: k must be positive");
  RatVec w(z.begin(), z.end());
  Rational half = lattice.norm(z) / 2;
  w.push_back(half);
  w.push_back(Rational(Integer(1), Integer(k)));
  w.back().canonicalize();

  const Lattice ext = extended_lattice(lattice, k);
  RatVec e1(z.size() + 2);
  e1[z.size()] = 1;
  if (ext.norm(std::span<const Rational>(w)) != 0 || ext.pair(std::span<const Rational>(w), std::span<const Rational>(e1)) != -1)
    throw std::logic_error("cusp_embedding: normalization failed");
  return w;
}

}  // namespace lorentz::km
