#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sheflab/sheffer.hpp"

using namespace sheflab;
using Poly = DensePolynomial<Rational>;

namespace {

std::mt19937_64 rng(20240819);

Rational rand_rational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rational(num(rng)) / den(rng);
}

ShefferPair<Rational> rand_sheffer(int order) {
  TruncatedSeries<Rational> g(order), f(order);
  for (int k = 0; k <= order; ++k) {
    g[k] = rand_rational();
    f[k] = rand_rational();
  }
  if (g[0] == 0) g[0] = 1;
  f[0] = 0;
  if (f[1] == 0) f[1] = 1;
  return ShefferPair<Rational>({g, f});
}

}  // namespace

TEST_CASE("bernoulli weight series") {
  auto b = bernoulli_pair(8);
  const auto& g = b.pair().g;
  // z/(e^z - 1): 1, -1/2, 1/12, 0, -1/720, 0, 1/30240, 0, ...
  CHECK(g[0] == 1);
  CHECK(g[1] == Rational(-1) / 2);
  CHECK(g[2] == Rational(1) / 12);
  CHECK(g[3] == 0);
  CHECK(g[4] == Rational(-1) / 720);
  CHECK(g[5] == 0);
  CHECK(g[6] == Rational(1) / 30240);
}

TEST_CASE("bernoulli polynomials") {
  auto b = bernoulli_pair(6);
  auto b2 = sheffer_poly(b, 2);
  CHECK(b2 == Poly({Rational(1) / 6, -1, 1}));  // s^2 - s + 1/6
  auto b6 = sheffer_poly(b, 6);
  // s^6 - 3 s^5 + 5/2 s^4 - 1/2 s^2 + 1/42
  CHECK(b6 == Poly({Rational(1) / 42, 0, Rational(-1) / 2, 0, Rational(5) / 2, -3, 1}));
}

TEST_CASE("bernoulli cognate polynomials") {
  auto c = bernoulli_cognate_pair(4);
  CHECK(c.pair().g[0] == 1);
  CHECK(c.pair().g[1] == Rational(1) / 2);
  CHECK(c.pair().g[2] == Rational(1) / 6);
  auto c2 = sheffer_poly(c, 2);
  CHECK(c2 == Poly({Rational(1) / 3, 1, 1}));  // s^2 + s + 1/3
}

TEST_CASE("euler polynomials") {
  auto e = euler_pair(4);
  CHECK(sheffer_poly(e, 0) == Poly({Rational(1)}));
  CHECK(sheffer_poly(e, 1) == Poly({Rational(-1) / 2, 1}));  // s - 1/2
  CHECK(sheffer_poly(e, 3) == Poly({Rational(1) / 4, 0, Rational(-3) / 2, 1}));
}

TEST_CASE("hermite polynomials") {
  auto h = hermite_pair(5);
  CHECK(sheffer_poly(h, 2) == Poly({-2, 0, 4}));       // 4s^2 - 2
  CHECK(sheffer_poly(h, 3) == Poly({0, -12, 0, 8}));   // 8s^3 - 12s
  CHECK(sheffer_poly(h, 5) == Poly({0, 120, 0, -160, 0, 32}));
}

TEST_CASE("monomial pair gives s^n") {
  auto m = monomial_pair(5);
  for (int n = 0; n <= 5; ++n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    CHECK(sheffer_poly(m, n) == Poly(c));
  }
}

TEST_CASE("umbral composition equals group product") {
  const int order = 8;
  for (int trial = 0; trial < 50; ++trial) {
    auto a = rand_sheffer(order);
    auto b = rand_sheffer(order);
    ShefferPair<Rational> prod(group_mul(a.pair(), b.pair()));
    for (int n = 0; n <= order; ++n)
      CHECK(umbral_compose(a, b, n) == sheffer_poly(prod, n));
  }
}

TEST_CASE("umbral composition with the inverse recovers monomials") {
  const int order = 8;
  auto mono = monomial_pair(order);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = rand_sheffer(order);
    ShefferPair<Rational> ainv(group_inv(a.pair()));
    for (int n = 0; n <= order; ++n)
      CHECK(umbral_compose(a, ainv, n) == sheffer_poly(mono, n));
  }
}

TEST_CASE("cognate of the cognate recovers the original polynomials") {
  auto b = bernoulli_pair(10);
  ShefferPair<Rational> c(cognate_map(b.pair()));
  ShefferPair<Rational> cc(cognate_map(c.pair()));
  for (int n = 0; n <= 8; ++n) CHECK(sheffer_poly(cc, n) == sheffer_poly(b, n));
}

TEST_CASE("scale_variable evaluates at a*s") {
  auto b = bernoulli_pair(6);
  auto b3 = scale_variable(b, Rational(3));
  for (int n = 0; n <= 6; ++n) {
    auto p = sheffer_poly(b, n);
    auto q = sheffer_poly(b3, n);
    for (int v = -3; v <= 3; ++v)
      CHECK(q(Rational(v)) == p(Rational(3 * v)));
  }
  // a non-Appell pair must throw
  TruncatedSeries<Rational> g(4), f(4);
  g[0] = 1;
  f[1] = 1;
  f[2] = 1;
  ShefferPair<Rational> notappell({g, f});
  CHECK_THROWS_AS(scale_variable(notappell, Rational(2)), std::invalid_argument);
}

TEST_CASE("degree and leading coefficient") {
  const int order = 8;
  for (int trial = 0; trial < 30; ++trial) {
    auto a = rand_sheffer(order);
    Rational lead = a.pair().g[0];
    for (int n = 0; n <= order; ++n) {
      auto p = sheffer_poly(a, n);
      CHECK(p.degree() == n);
      CHECK(p.leading() == lead);
      lead *= a.pair().f[1];
    }
  }
}
