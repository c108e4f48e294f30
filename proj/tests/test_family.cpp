#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sheflab/family.hpp"

using namespace sheflab;

namespace {

std::mt19937_64 rng(20240822);

FamilyParams rand_params() {
  std::uniform_int_distribution<int> zd(1, 6), ed(-4, 4), den(1, 4);
  FamilyParams fp;
  fp.z1 = zd(rng);
  fp.z2 = fp.z1 + zd(rng);
  fp.p = Rational(ed(rng)) / den(rng);
  fp.q = Rational(ed(rng)) / den(rng);
  Rational two_c = Rational(ed(rng));  // p*-p = q*-q must be an even multiple of 1/2? no: any value
  fp.p_star = fp.p + two_c;
  fp.q_star = fp.q + two_c;
  if (ed(rng) > 0) {
    fp.alphas = {fp.z1 * fp.z1 + zd(rng)};
    fp.p_is = {Rational(ed(rng)) / den(rng)};
  }
  return fp;
}

}  // namespace

TEST_CASE("validation rejects bad parameters") {
  auto fp = example1_left();
  fp.z2 = fp.z1;
  CHECK_THROWS_AS(fp.validate(), std::invalid_argument);
  fp = example1_left();
  fp.p_star += 1;
  CHECK_THROWS_AS(fp.validate(), std::invalid_argument);
  fp = example1_left();
  fp.alphas = {Rational(1) / 2};  // not > z1^2
  CHECK_THROWS_AS(fp.validate(), std::invalid_argument);
}

TEST_CASE("kernel coefficients for (z1,z2)=(1,7)") {
  auto built = build_pair<Rational>(example1_left(), 5);
  const auto& f = built.pair.pair().f;
  CHECK(f[1] == Rational(-16) / 7);         // -2(1 + 1/7)
  CHECK(f[2] == 0);
  CHECK(f[3] == Rational(-688) / 1029);     // -2(1 + 1/343)/3
  CHECK(f[4] == 0);
  CHECK(f[5] == Rational(-2) / 5 * (Rational(1) + Rational(1) / 16807));
}

TEST_CASE("weight series constant term is one and scale is positive") {
  auto built = build_pair<Rational>(example1_left(), 8);
  CHECK(built.pair.pair().g[0] == 1);
  CHECK(built.scale > 0);
  // z1^{p+p*} z2^{q+q*} alpha^{p_i} = 1^5 * 7^1 * 2^{-1} = 7/2
  CHECK(abs(built.scale - Real("3.5")) < Real("1e-20"));
}

TEST_CASE("symmetry center") {
  CHECK(example1_left().c() == Rational(-3) / 2);
  CHECK(example1_right().c() == Rational(3) / 2);
}

TEST_CASE("even modification is an even series") {
  for (int trial = 0; trial < 50; ++trial) {
    auto fp = rand_params();
    auto e = even_modification<Rational>(fp, 10);
    for (int k = 1; k <= 10; k += 2) CHECK(e[k] == 0);
  }
}

TEST_CASE("critical parameters") {
  ScopedPrecision guard(128);
  auto cp17 = critical_params(Real(1), Real(7));
  CHECK(cp17.regime_T1);  // 1 - 42 + 49 = 8 >= 0
  CHECK(abs(cp17.T1 - Real("0.75")) < Real("1e-30"));
  CHECK(abs(cp17.T - Real("0.75")) < Real("1e-30"));
  CHECK(abs(cp17.T2 - Real(8) / (4 * sqrt(Real(7)))) < Real("1e-30"));

  auto cp13 = critical_params(Real(1), Real(3));
  CHECK(!cp13.regime_T1);  // 1 - 18 + 9 < 0
  CHECK(abs(cp13.T1 - Real("0.5")) < Real("1e-30"));
  CHECK(abs(cp13.T - 1 / sqrt(Real(3))) < Real("1e-30"));
}

TEST_CASE("saddle point endpoints and residuals") {
  ScopedPrecision guard(256);
  for (int zpair = 0; zpair < 2; ++zpair) {
    Real z1(1), z2(zpair == 0 ? 3 : 7);
    auto cp = critical_params(z1, z2);
    // zeta(0) = z1
    auto s0 = saddle_point(Real(0), z1, z2);
    CHECK(abs(s0.zeta - Complex(z1)) < Real("1e-40"));
    // interior residuals are tiny (the function throws otherwise)
    for (int i = 1; i < 50; ++i) {
      auto sp = saddle_point(cp.T2 * i / 50, z1, z2);
      CHECK(sp.residual < Real("1e-25"));
    }
  }
  // zeta(T2) = i sqrt(z1 z2) for (1,3)
  auto cp13 = critical_params(Real(1), Real(3));
  auto stop = saddle_point(cp13.T2, Real(1), Real(3));
  CHECK(abs(stop.zeta - Complex(Real(0), sqrt(Real(3)))) < Real("1e-30"));
}

TEST_CASE("density is nonnegative and integrates to one half") {
  ScopedPrecision guard(256);
  for (int zpair = 0; zpair < 2; ++zpair) {
    Real z1(1), z2(zpair == 0 ? 3 : 7);
    auto cp = critical_params(z1, z2);
    for (int i = 1; i < 40; ++i)
      CHECK(limiting_density(cp.T * i / 40, z1, z2) >= 0);
    Real mass = density_integral(Real(0), cp.T, z1, z2);
    CHECK(abs(mass - Real("0.5")) < Real("1e-8"));
  }
}

TEST_CASE("density integral is additive") {
  ScopedPrecision guard(256);
  Real z1(1), z2(3);
  auto cp = critical_params(z1, z2);
  Real a = cp.T / 5, b = cp.T / 2;
  Real whole = density_integral(Real(0), b, z1, z2);
  Real split = density_integral(Real(0), a, z1, z2) + density_integral(a, b, z1, z2);
  CHECK(abs(whole - split) < Real("1e-9"));
}

TEST_CASE("predicted real limits for example 1") {
  auto left = predicted_real_limits(example1_left());
  // c = -3/2, c+p = 5/2, ceil = 3: limits c +- {5/2+1-k}
  REQUIRE(left.size() == 6);
  CHECK(left[0] == Rational(1));    // -3/2 + 5/2
  CHECK(left[1] == Rational(-4));   // -3/2 - 5/2
  CHECK(left[2] == Rational(0));
  CHECK(left[3] == Rational(-3));
  CHECK(left[4] == Rational(-1));
  CHECK(left[5] == Rational(-2));
  CHECK(predicted_real_limits(example1_right()).empty());
}

TEST_CASE("parity identity for random parameters") {
  for (int trial = 0; trial < 10; ++trial) {
    auto fp = rand_params();
    auto built = build_pair<Rational>(fp, 8);
    for (int n = 1; n <= 8; ++n) {
      auto h = sheffer_poly(built.pair, n);
      auto g = h.shifted(fp.c());
      CHECK(check_reflection_identity(g, Rational(0)));
    }
  }
}

TEST_CASE("small experiment end to end") {
  auto res = run_experiment(example1_right(), 12);
  CHECK(res.n == 12);
  CHECK(res.roots.converged);
  CHECK(res.parity_ok);
  CHECK(res.parity_exact);
  CHECK(res.poly.degree() == 12);
  // every zero on Re = 3/2 at this scale (no real zeros for c+p<0)
  CHECK(res.locus.on_line.size() == 12);
  CHECK(res.locus.real_axis.empty());
  CHECK(res.locus.other.empty());
  CHECK(res.t_values.size() == 12);
}

TEST_CASE("density comparison runs and reports bins") {
  auto res = run_experiment(example1_right(), 40);
  auto cmp = empirical_vs_limit(res, example1_right(), 10);
  REQUIRE(cmp.bins.size() == 10);
  Real emp(0), ana(0);
  for (const auto& b : cmp.bins) {
    emp += b.empirical_mass;
    ana += b.analytic_mass;
  }
  // 20 of 40 zeros have t>0; a few may overshoot T at this small n
  CHECK(emp > Real("0.4"));
  CHECK(emp <= Real("0.5") + Real("1e-20"));
  CHECK(abs(ana - Real("0.5")) < Real("1e-7"));
  CHECK(cmp.l1_distance < Real("0.5"));
}
