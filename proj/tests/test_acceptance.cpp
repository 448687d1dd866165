// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "lorentz/cones.hpp"
#include "lorentz/kacmoody.hpp"
#include "lorentz/qseries.hpp"
#include "lorentz/vinberg.hpp"
#include "lorentz/weylstruct.hpp"
#include "support.hpp"

using namespace lorentz;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

Isometry phi_of(const Lattice& l) { return reflection(l, fx::d3()) * reflection(l, fx::d2()); }

vinberg::ChamberReport chamber(const char* name, std::initializer_list<long> h, std::initializer_list<long> norms) {
  vinberg::RootFilter f;
  for (auto n : norms) f.norms.emplace_back(n);
  return vinberg::run(fx::load(name), fx::v(h), f, {});
}

bool same_up_to_permutation(const IntMatrix& g, const IntMatrix& want) {
  if (g.rows() != want.rows()) return false;
  std::vector<std::size_t> p(g.rows());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  do {
    bool eq = true;
    for (std::size_t i = 0; i < p.size() && eq; ++i)
      for (std::size_t j = 0; j < p.size() && eq; ++j) eq = g(p[i], p[j]) == want(i, j);
    if (eq) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

IntMatrix triangle_gram() {
  IntMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = i == j ? 2 : -2;
  return m;
}

// 1
Outcome example_chamber() {
  Outcome o;
  auto rep = chamber("triangle.json", {1, 1, 1}, {2});
  o.require(rep.accepted.size() == 3, "expected three roots");
  o.require(rep.terminated, "no finite-volume certificate");
  o.require(same_up_to_permutation(rep.gram, triangle_gram()), "Gram matrix differs");
  return o;
}

// 2
Outcome weyl_vectors() {
  Outcome o;
  auto l = fx::load("triangle.json");
  auto tri = weyl::lattice_weyl_vector(l, fx::triangle());
  o.require(tri.rho && *tri.rho == fx::q({{1, 2}, {1, 2}, {1, 2}}), "triangle rho");
  o.require(tri.rho_norm == Rational(-3, 2), "triangle rho norm");
  RootSet seeds{fx::d1(), fx::f01(), fx::f02()};
  auto par = weyl::lattice_weyl_vector(l, seeds);
  o.require(par.rho && *par.rho == fx::q({{0, 1}, {1, 4}, {1, 4}}), "seed rho");
  if (!par.rho) return o;
  const long norms[] = {2, 8, 8};
  for (std::size_t i = 0; i < 3; ++i) {
    RatVec a = to_rational(seeds[i]);
    o.require(l.norm(seeds[i]) == norms[i], "seed norms");
    o.require(l.pair(std::span<const Rational>(*par.rho), std::span<const Rational>(a)) == -Rational(l.norm(seeds[i])) / 2,
              "Weyl property on seeds");
  }
  return o;
}

// 3
Outcome arithmetic_type() {
  Outcome o;
  auto l = fx::load("triangle.json");
  auto at = cones::is_arithmetic_type(l, fx::triangle());
  o.require(at.arithmetic && at.finite_volume, "triangle not arithmetic");
  auto cone = cones::dual_extreme_rays(l, fx::triangle());
  std::set<oracle::Vec> rays;
  for (const auto& r : cone.generators.rays) {
    rays.insert(oracle::to_vec(r));
    o.require(l.norm(r) == 0, "ray not isotropic");
  }
  o.require(rays == std::set<oracle::Vec>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, "extreme rays");

  auto g = oracle::gram(l);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coord(-9, 9);
  int sampled = 0;
  while (sampled < 100) {
    oracle::Vec x{coord(rng), coord(rng), coord(rng)};
    if (oracle::form(g, x, x) >= 0) continue;
    if (oracle::form(g, x, {1, 1, 1}) > 0)
      for (auto& e : x) e = -e;  // same half as the chamber
    ++sampled;
    IntVec xi = fx::v({x[0], x[1], x[2]});
    bool found = false;
    for (long n = 1; n <= 12 && !found; ++n) found = cones::q_plus_membership(l, fx::triangle(), scale(xi, Integer(n))).has_value();
    o.require(found, "timelike vector outside Q+");
  }
  auto one = cones::is_arithmetic_type(l, {fx::d1()});
  o.require(!one.arithmetic, "{d1} reported arithmetic");
  o.require(one.witness && l.norm(*one.witness) > 0, "no spacelike witness");
  return o;
}

// 4
Outcome gram_bound() {
  Outcome o;
  struct Case {
    const char* name;
    std::initializer_list<long> h;
    std::initializer_list<long> norms;
  };
  for (const auto& c : {Case{"triangle.json", {1, 1, 1}, {2}}, Case{"triangle.json", {3, 4, 5}, {2, 8}},
                        Case{"u_a1.json", {3, 4, 1}, {2}}, Case{"u_a2.json", {3, 4, 1, 1}, {2}},
                        Case{"u_a1a1.json", {3, 4, 1, 1}, {2}}}) {
    auto rep = chamber(c.name, c.h, c.norms);
    o.require(rep.terminated, std::string("chamber did not close: ") + c.name);
    auto b = vinberg::gram_bound_check(fx::load(c.name), rep.accepted, false);
    o.require(b.violations.empty(), std::string("violation in ") + c.name);
    o.require(b.spanning_subset.has_value(), std::string("no spanning subset in ") + c.name);
  }
  // d1 against a real root far from it: -2 S / sqrt(2*2) = -S > 62
  auto l = fx::load("triangle.json");
  auto datum = km::make_root_datum(l, fx::triangle());
  std::optional<IntVec> far;
  for (const auto& r : km::real_roots(datum, 40))
    if (l.pair(fx::d1(), r.vector) < -62) {
      far = r.vector;
      break;
    }
  o.require(far.has_value(), "no distant root found");
  if (far) {
    auto b = vinberg::gram_bound_check(l, {fx::d1(), *far}, false);
    o.require(b.violations.size() == 1, "synthetic violation missed");
  }
  o.require(!vinberg::pair_within_bound(Integer(-63), Integer(2), Integer(2), false), "pair test at 63");
  o.require(vinberg::pair_within_bound(Integer(-62), Integer(2), Integer(2), false), "pair test at 62");
  o.require(!vinberg::pair_within_bound(Integer(-62), Integer(2), Integer(2), true), "strict pair test at 62");
  return o;
}

oracle::Mat cartan_of(const km::CartanMatrix& c) {
  oracle::Mat m(c.a.rows(), oracle::Vec(c.a.cols()));
  for (std::size_t i = 0; i < c.a.rows(); ++i)
    for (std::size_t j = 0; j < c.a.cols(); ++j) m[i][j] = c.a(i, j).get_si();
  return m;
}

// 5
Outcome denominator() {
  Outcome o;
  auto d = km::make_root_datum(fx::load("triangle.json"), fx::triangle());
  const int n = 6;
  auto table = km::solve_multiplicities(d, n);
  o.require(table.residual_zero, "residual");
  std::map<oracle::Key, long> m;
  for (const auto& [k, v] : table.mults)
    if (v != 0) m[k] = v.get_si();
  auto prod = oracle::expand_product(m, 3, n);
  auto sum = km::sum_side(d, n);
  o.require(prod.size() == sum.terms.size(), "term count");
  for (const auto& [k, c] : prod) o.require(sum.coefficient(k) == c, "coefficient mismatch");
  for (const auto& r : km::real_roots(d, n)) o.require(table.mults.at(r.coeffs) == 1, "real root multiplicity");
  o.require(km::check_w_invariance(d, table), "W-invariance");
  return o;
}

// 6
Outcome anti_invariance() {
  Outcome o;
  auto d = km::make_root_datum(fx::load("triangle.json"), fx::triangle());
  o.require(d.weyl_data.rho && *d.weyl_data.rho == fx::q({{1, 2}, {1, 2}, {1, 2}}), "rho");
  o.require(km::anti_invariance_check(d, 4), "anti-invariance");
  auto els = km::weyl_elements(d, 4);
  bool all_caught = true;
  for (std::size_t i = 0; i < els.size(); ++i) {
    auto bad = els;
    bad[i].sign = -bad[i].sign;
    if (km::anti_invariance_check(d, bad, 4)) all_caught = false;
  }
  o.require(all_caught, "corrupted sign accepted");
  return o;
}

// 7
Outcome qseries() {
  Outcome o;
  auto e = qs::eta_power(-24, 20);
  auto naive = oracle::eta_naive(-24, 20);
  for (std::size_t i = 0; i <= 20; ++i) o.require(e[i] == naive[i], "eta(-24) coefficient");
  auto tau = qs::ramanujan_tau(20);
  auto naive24 = oracle::eta_naive(24, 19);
  o.require(tau.size() == 20, "tau length");
  for (std::size_t i = 0; i < 20; ++i) o.require(tau[i] == naive24[i], "tau against oracle");
  o.require(tau[0] == 1 && tau[1] == -24 && tau[2] == 252, "tau(1..3)");
  std::vector<Integer> t24(3, Integer(24));
  auto m = qs::cusp_identity(qs::Direction::TauToM, t24, 3);
  o.require(m == std::vector<Integer>{Integer(24), Integer(-252), Integer(1472)}, "m values");
  o.require(qs::cusp_identity(qs::Direction::MToTau, m, 3) == t24, "round trip");
  return o;
}

// 8
Outcome cusp_embedding() {
  Outcome o;
  auto l = fx::load("triangle.json");
  auto g = oracle::gram(l);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30), kd(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    RatVec z(3);
    for (auto& x : z) {
      x = Rational(Integer(num(rng)), Integer(den(rng)));
      x.canonicalize();
    }
    const long k = kd(rng);
    RatVec w = km::cusp_embedding(l, k, z);
    // S' = S + U(k) evaluated by hand
    Rational ww = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) ww += Rational(g[i][j]) * w[i] * w[j];
    ww += -2 * k * w[3] * w[4];
    o.require(ww == 0, "S'(w,w)");
    o.require(-k * w[4] == -1, "S'(w,e1)");
  }
  return o;
}

// 9
Outcome parabolic() {
  Outcome o;
  auto l = fx::load("triangle.json");
  Isometry phi = phi_of(l);
  o.require(is_isometry(l, phi), "phi isometry");
  o.require(phi(fx::c()) == fx::c(), "phi fixes c");
  IntMatrix n = phi.matrix;
  for (std::size_t i = 0; i < 3; ++i) n(i, i) -= 1;
  o.require(!(n * n).is_zero(), "(phi-I)^2 = 0");
  o.require((n * n * n).is_zero(), "(phi-I)^3 != 0");
  auto sym = weyl::symmetry_group(l, fx::triangle());
  o.require(sym.order && *sym.order == 6, "symmetry order");
  RatVec c4 = fx::q({{0, 1}, {1, 4}, {1, 4}});
  for (long k : {2, 3}) {
    auto s = weyl::build_pk_sample(l, phi, fx::d1(), fx::f01(), fx::f02(), k, 6);
    o.require(s.acceptable, "sample acceptability");
    o.require(s.rho && *s.rho == c4, "sample rho");
    o.require(s.weyl_property, "sample Weyl property");
    // independent recheck of the reported fields
    bool obtuse_free = true;
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
      RatVec a = to_rational(s.roots[i]);
      o.require(is_crystallographic(l, s.roots[i]), "sample root not crystallographic");
      o.require(2 * l.pair(std::span<const Rational>(c4), std::span<const Rational>(a)) == -l.norm(s.roots[i]),
                "Weyl property recheck");
      for (std::size_t j = i + 1; j < s.roots.size(); ++j)
        if (l.pair(s.roots[i], s.roots[j]) > 0) obtuse_free = false;
    }
    o.require(s.non_obtuse == obtuse_free, "non-obtuseness report");
    std::printf("  P_%ld window 6: %zu roots, non_obtuse=%s\n", k, s.roots.size(), s.non_obtuse ? "true" : "false");
  }
  return o;
}

// 10
Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<long> coord(-4, 4);
  const char* names[] = {"triangle.json", "u_a1.json", "u_a2.json", "u_a1a1.json"};
  int tested = 0;
  for (int attempt = 0; tested < 200 && attempt < 100000; ++attempt) {
    auto l = fx::load(names[attempt % 4]);
    IntVec d;
    for (std::size_t i = 0; i < l.rank(); ++i) d.emplace_back(coord(rng));
    if (l.norm(d) <= 0 || !is_crystallographic(l, d)) continue;
    ++tested;
    Isometry s = reflection(l, d);
    o.require(is_isometry(l, s), "reflection not an isometry");
    o.require(s * s == Isometry::identity(l.rank()), "reflection not an involution");
    o.require(s(d) == negate(d), "s(d) != -d");
  }
  o.require(tested == 200, "not enough roots sampled");

  int cones_tested = 0;
  for (int attempt = 0; attempt < 2000 && cones_tested < 50; ++attempt) {
    const std::size_t dim = 2 + attempt % 3;
    std::vector<IntVec> normals;
    for (std::size_t i = 0; i < dim + attempt % 3; ++i) {
      IntVec x;
      for (std::size_t j = 0; j < dim; ++j) x.emplace_back(coord(rng));
      normals.push_back(x);
    }
    auto gens = cones::extreme_rays(normals, dim);
    if (!gens.lineality.empty() || gens.rays.size() < dim) continue;
    ++cones_tested;
    auto polar = cones::extreme_rays(gens.rays, dim);
    auto back = cones::extreme_rays(polar.rays, dim);
    o.require(polar.lineality.empty() && back.lineality.empty() && back.rays == gens.rays, "duality round trip");
  }
  o.require(cones_tested == 50, "not enough cones sampled");

  auto d = km::make_root_datum(fx::load("triangle.json"), fx::triangle());
  auto full = km::weyl_elements(d, 5);
  for (int m = 0; m <= 5; ++m) {
    auto part = km::weyl_elements(d, m);
    o.require(part.size() <= full.size(), "prefix size");
    for (std::size_t i = 0; i < part.size() && i < full.size(); ++i)
      o.require(part[i].word == full[i].word && part[i].matrix == full[i].matrix, "prefix stability");
  }
  auto words = oracle::weyl_words(cartan_of(d.cartan), 5);
  std::set<oracle::Mat> word_mats;
  for (const auto& w : words) word_mats.insert(w.m);
  for (const auto& e : full) {
    Isometry w = Isometry::identity(3);
    for (auto i : e.word) w = w * reflection(d.lattice, d.simple_roots[i]);
    o.require(w == e.matrix, "matrix-word consistency");
    // simple roots are the basis here, so lattice and root coordinates agree
    oracle::Mat m(3, oracle::Vec(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = e.matrix.matrix(i, j).get_si();
    o.require(word_mats.count(m) == 1, "element missing from word oracle");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "triangle chamber from controller (1,1,1)", 5, example_chamber},
      {2, "lattice Weyl vectors", 0, weyl_vectors},
      {3, "arithmetic type vs Q+ sampling", 30, arithmetic_type},
      {4, "Gram bound on computed chambers", 0, gram_bound},
      {5, "denominator identity to height 6", 60, denominator},
      {6, "anti-invariance at N=4", 0, anti_invariance},
      {7, "eta powers, tau and the cusp identity", 5, qseries},
      {8, "cusp embedding normalization", 0, cusp_embedding},
      {9, "parabolic isometry and P_k samples", 0, parabolic},
      {10, "property suites", 60, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) o.require(false, "time limit exceeded");
    std::printf("%s %2d %s (%.3f s%s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds > 0 ? (std::string(", limit ") + std::to_string(int(c.limit_seconds)) + " s").c_str() : "",
                o.ok ? "" : ": ", o.note.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
