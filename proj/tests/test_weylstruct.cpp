#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lorentz/weylstruct.hpp"
#include "support.hpp"

using namespace lorentz;
using namespace lorentz::weyl;

namespace {

Isometry phi_of(const Lattice& l) { return reflection(l, fx::d3()) * reflection(l, fx::d2()); }

RatVec c4() { return fx::q({{0, 1}, {1, 4}, {1, 4}}); }

IntMatrix minus_identity(const IntMatrix& m) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= 1;
  return out;
}

}  // namespace

TEST_CASE("root set validation") {
  auto l = fx::load("triangle.json");
  CHECK_NOTHROW(validate_root_set(l, fx::triangle()));
  CHECK_THROWS_AS(validate_root_set(l, {fx::d1(), fx::f01()}), DomainError);  // S = +4
  CHECK_THROWS_AS(validate_root_set(l, {fx::d1(), fx::c()}), DomainError);
  CHECK_THROWS_AS(validate_root_set(l, {fx::d1(), scale(fx::d1(), Integer(2))}), DomainError);
}

TEST_CASE("lattice Weyl vectors") {
  auto l = fx::load("triangle.json");
  auto tri = lattice_weyl_vector(l, fx::triangle());
  REQUIRE(tri.rho);
  CHECK(*tri.rho == fx::q({{1, 2}, {1, 2}, {1, 2}}));
  CHECK(tri.rho_norm == Rational(-3, 2));
  CHECK(tri.kind == WeylKind::Elliptic);

  IntVec phid1 = phi_of(l)(fx::d1());
  CHECK(phid1 == fx::v({1, 2, 6}));
  auto par = lattice_weyl_vector(l, {fx::f01(), fx::f02(), phid1});
  REQUIRE(par.rho);
  CHECK(*par.rho == c4());
  CHECK(par.rho_norm == 0);
  CHECK(par.kind == WeylKind::Parabolic);

  auto seeds = lattice_weyl_vector(l, {fx::d1(), fx::f01(), fx::f02()});
  REQUIRE(seeds.rho);
  CHECK(*seeds.rho == c4());
  for (const auto& a : {fx::d1(), fx::f01(), fx::f02()}) {
    RatVec ar = to_rational(a);
    CHECK(2 * l.pair(std::span<const Rational>(*seeds.rho), std::span<const Rational>(ar)) + l.norm(a) == 0);
  }

  auto none = lattice_weyl_vector(l, {fx::d1(), fx::d2(), fx::d3(), scale(fx::d1(), Integer(2))});
  CHECK(none.kind == WeylKind::None);
  CHECK_FALSE(none.rho);
  CHECK_THROWS_AS(lattice_weyl_vector(l, {fx::d1(), fx::d2()}), UnderDetermined);
  CHECK_THROWS_AS(lattice_weyl_vector(l, {}), UnderDetermined);

  // uniqueness under permutation
  auto perm = lattice_weyl_vector(l, {fx::d3(), fx::d1(), fx::d2()});
  CHECK(*perm.rho == *tri.rho);
}

TEST_CASE("generalized Weyl vectors") {
  auto l = fx::load("triangle.json");
  RatVec c = to_rational(fx::c());
  CHECK(generalized_weyl_check(l, {fx::d1()}, c, Rational(4)));
  CHECK_FALSE(generalized_weyl_check(l, {fx::d1()}, c, Rational(3)));
  CHECK(generalized_weyl_check(l, {fx::d2()}, c, Rational(0)));
  CHECK_FALSE(generalized_weyl_check(l, {fx::d1()}, to_rational(fx::d1()), Rational(10)));
  CHECK(generalized_weyl_check(l, {fx::d2()}, to_rational(fx::d1()), Rational(10)));
  CHECK_THROWS_AS(generalized_weyl_check(l, {fx::d1()}, RatVec(3), Rational(1)), DomainError);
}

TEST_CASE("admissible twists") {
  auto l = fx::load("triangle.json");
  CHECK(admissible_twists(l, fx::d1()) == std::vector<Integer>{1, 2});
  CHECK(l.norm(scale(fx::d1(), Integer(2))) == 8);
  CHECK(64 % 8 == 0);
  CHECK_THROWS_AS(admissible_twists(l, fx::f01()), DomainError);

  auto u = fx::load("u_a1.json");
  CHECK(admissible_twists(u, fx::v({1, -1, 0})) == std::vector<Integer>{1});
  CHECK(admissible_twists(u, fx::v({0, 0, 1})) == std::vector<Integer>{1, 2});

  for (const char* name : {"triangle.json", "u_a1.json", "u_a2.json"}) {
    auto lf = fx::load(name);
    auto g = oracle::gram(lf);
    oracle::box(lf.rank(), 2, [&](const oracle::Vec& x) {
      if (!oracle::primitive(x) || !oracle::crystallographic(g, x)) return;
      IntVec d;
      for (auto e : x) d.push_back(Integer(e));
      for (const auto& lam : admissible_twists(lf, d)) CHECK(is_crystallographic(lf, scale(d, lam)));
    });
  }
}

TEST_CASE("M* and P membership") {
  auto l = fx::load("triangle.json");
  CHECK(m_star_p_membership(l, {}, RatVec(3)));
  CHECK(m_star_p_membership(l, {fx::d1(), fx::f01(), fx::f02()}, c4()));
  CHECK(l.pairings(std::span<const Rational>(c4())) == fx::q({{-1, 1}, {0, 1}, {0, 1}}));
  CHECK_FALSE(m_star_p_membership(l, {}, fx::q({{1, 3}, {0, 1}, {0, 1}})));
}

TEST_CASE("candidate roots for a Weyl vector") {
  auto l = fx::load("triangle.json");
  RatVec rho = fx::q({{1, 2}, {1, 2}, {1, 2}});
  auto cands = candidate_roots_for_weyl_vector(l, rho, Integer(64));
  std::set<oracle::Vec> got;
  for (const auto& a : cands) got.insert(oracle::to_vec(a));
  CHECK(got.count({1, 0, 0}));
  CHECK(got.count({0, 1, 0}));
  CHECK(got.count({0, 0, 1}));
  // box oracle: 2 S(rho,a) = -S(a,a) with rho = (1,1,1)/2
  auto g = oracle::gram(l);
  std::set<oracle::Vec> expect;
  oracle::box(3, 8, [&](const oracle::Vec& x) {
    long n = oracle::form(g, x, x);
    if (n <= 0 || n > 64 || !oracle::crystallographic(g, x)) return;
    if (oracle::form(g, {1, 1, 1}, x) != -n) return;
    expect.insert(x);
  });
  CHECK(got == expect);
  CHECK(candidate_roots_for_weyl_vector(l, rho, Integer(0)).empty());
  CHECK_THROWS_AS(candidate_roots_for_weyl_vector(l, to_rational(fx::d1()), Integer(8)), DomainError);

  // isotropic rho needs a window
  CHECK_THROWS_AS(candidate_roots_for_weyl_vector(l, c4(), Integer(64)), DomainError);
  auto par = candidate_roots_for_weyl_vector(l, c4(), Integer(64), SearchWindow{fx::v({1, 1, 1}), Integer(200)});
  std::set<oracle::Vec> pg;
  for (const auto& a : par) pg.insert(oracle::to_vec(a));
  CHECK(pg.count({1, 0, 0}));
  CHECK(pg.count({4, 2, 0}));
  CHECK(pg.count({4, 0, 2}));
  CHECK(pg.count({1, 2, 6}));
}

TEST_CASE("symmetry group of the triangle") {
  auto l = fx::load("triangle.json");
  auto sym = symmetry_group(l, fx::triangle());
  REQUIRE(sym.order);
  CHECK(*sym.order == 6);
  CHECK(sym.elements.size() == 6);
  std::set<std::vector<Integer>> mats;
  for (const auto& e : sym.elements) {
    CHECK(is_isometry(l, e.isometry));
    mats.insert(e.isometry.matrix.data());
    // each element fixes rho
    RatVec rho = fx::q({{1, 2}, {1, 2}, {1, 2}});
    CHECK(e.isometry(std::span<const Rational>(rho)) == rho);
  }
  for (const auto& a : sym.elements)
    for (const auto& b : sym.elements) {
      CHECK(mats.count((a.isometry * b.isometry).matrix.data()));
      CHECK(mats.count(inverse(a.isometry).matrix.data()));
    }
  CHECK(sym.elements.front().isometry == Isometry::identity(3));

  auto two = symmetry_group(l, {scale(fx::d1(), Integer(2)), fx::d2(), fx::d3()});
  CHECK(*two.order == 2);
  CHECK_THROWS_AS(symmetry_group(l, {fx::d1(), fx::d2()}), UnderDetermined);
}

TEST_CASE("fixed isotropic vectors and parabolic translations") {
  auto l = fx::load("triangle.json");
  Isometry phi = phi_of(l);
  std::vector<Isometry> gens{phi};
  CHECK(fixed_isotropic(l, gens) == fx::c());
  std::vector<Isometry> id{Isometry::identity(3)};
  CHECK_THROWS_AS(fixed_isotropic(l, id), Indeterminate);
  std::vector<Isometry> s1{reflection(l, fx::d1())};
  auto w = fixed_isotropic(l, s1);
  REQUIRE(w);
  CHECK(l.norm(*w) == 0);
  CHECK(s1[0](*w) == *w);

  CHECK(parabolic_translation(l, fx::d2(), fx::d3()) == phi);
  CHECK(is_unipotent(phi));
  IntMatrix n = minus_identity(phi.matrix);
  CHECK_FALSE((n * n).is_zero());
  CHECK((n * n * n).is_zero());
  Isometry t12 = parabolic_translation(l, fx::d1(), fx::d2());
  CHECK(t12(fx::v({1, 1, 0})) == fx::v({1, 1, 0}));
  CHECK_FALSE(t12 == Isometry::identity(3));
  auto a1 = fx::load("u_a1a1.json");
  CHECK_THROWS_AS(parabolic_translation(a1, fx::v({0, 0, 1, 0}), fx::v({0, 0, 0, 1})), DomainError);
}

TEST_CASE("the printed map is the square root of phi") {
  // s_d3 composed with the swap of d2 and d3; the printed image of d2 is -d3.
  auto l = fx::load("triangle.json");
  IntMatrix swap(3, 3);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = 1;
  Isometry sigma{swap};
  REQUIRE(is_isometry(l, sigma));
  Isometry psi = reflection(l, fx::d3()) * sigma;
  CHECK(is_isometry(l, psi));
  CHECK(psi(fx::d2()) == fx::v({0, 0, -1}));
  CHECK(psi(fx::d3()) == reflect(l, fx::d3(), fx::d2()));
  CHECK(psi(fx::d1()) == reflect(l, fx::d3(), fx::d1()));
  CHECK(psi * psi == phi_of(l));
  CHECK(psi(fx::c()) == fx::c());
}

TEST_CASE("P_k samples") {
  auto l = fx::load("triangle.json");
  Isometry phi = phi_of(l);
  auto s2 = build_pk_sample(l, phi, fx::d1(), fx::f01(), fx::f02(), 2, 2);
  std::set<oracle::Vec> got;
  for (const auto& a : s2.roots) got.insert(oracle::to_vec(a));
  CHECK(got.count({1, 2, 6}));
  CHECK(got.count({4, 2, 0}));
  CHECK(got.count({4, 0, 2}));
  CHECK(s2.acceptable);
  CHECK(s2.weyl_property);
  REQUIRE(s2.rho);
  CHECK(*s2.rho == c4());
  for (std::size_t i = 0; i < s2.roots.size(); ++i)
    CHECK(l.norm(s2.roots[i]) == (s2.seed[i] == 0 ? 2 : 8));

  for (long k : {2, 3}) {
    auto s = build_pk_sample(l, phi, fx::d1(), fx::f01(), fx::f02(), k, 6);
    CHECK(s.acceptable);
    CHECK(s.weyl_property);
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
      CHECK(is_crystallographic(l, s.roots[i]));
      CHECK((s.shift[i] % k == 0) == (s.seed[i] != 0));
    }
    CHECK(s.non_obtuse == !s.offending.has_value());
    if (s.offending) CHECK(l.pair(s.roots[s.offending->first], s.roots[s.offending->second]) > 0);
  }
  auto s3 = build_pk_sample(l, phi, fx::d1(), fx::f01(), fx::f02(), 3, 2);
  CHECK(s3.roots != s2.roots);
}

TEST_CASE("chamber classification") {
  auto l = fx::load("triangle.json");
  auto tri = classify_chamber(l, fx::triangle(), symmetry_group(l, fx::triangle()));
  CHECK(tri.kind == ChamberKind::Elliptic);
  CHECK(classify_chamber(l, {fx::d1()}, SymmetryGroup{}).kind == ChamberKind::Indefinite);

  Isometry phi = phi_of(l);
  auto s = build_pk_sample(l, phi, fx::d1(), fx::f01(), fx::f02(), 2, 6);
  SymmetryGroup sym;
  sym.generators = {phi * phi};
  auto cls = classify_chamber(l, s.roots, sym);
  CHECK(cls.kind == ChamberKind::ParabolicCandidate);
  CHECK(cls.cusp == fx::c());
}
