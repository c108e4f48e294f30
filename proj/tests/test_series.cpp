#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sheflab/series.hpp"

using namespace sheflab;
using S = TruncatedSeries<Rational>;

namespace {

std::mt19937_64 rng(20240817);

Rational rand_rational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rational(num(rng)) / den(rng);
}

S rand_series(int order) {
  S s(order);
  for (int k = 0; k <= order; ++k) s[k] = rand_rational();
  return s;
}

S exp_z(int order) {  // e^z - handy unit with known coefficients
  S z(order);
  if (order >= 1) z[1] = 1;
  return exp_series(z);
}

}  // namespace

TEST_CASE("construction and access") {
  S s(3);
  CHECK(s.order() == 3);
  for (int k = 0; k <= 3; ++k) CHECK(s[k] == 0);
  s[2] = Rational(1) / 2;
  CHECK(s[2] == Rational(1) / 2);
  CHECK_THROWS_AS(S(-1), std::invalid_argument);
}

TEST_CASE("exp of z has 1/k! coefficients") {
  auto e = exp_z(6);
  Rational fact(1);
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) fact *= k;
    CHECK(e[k] == Rational(1) / fact);
  }
}

TEST_CASE("log inverts exp") {
  S z(8);
  z[1] = 1;
  z[3] = Rational(-2) / 7;
  z[5] = Rational(5) / 3;
  auto back = log_series(exp_series(z));
  CHECK(back == z);
}

TEST_CASE("log(1/(1-z)) = sum z^k/k") {
  S f(7);
  for (int k = 0; k <= 7; ++k) f[k] = 1;  // 1/(1-z)
  auto y = log_series(f);
  CHECK(y[0] == 0);
  for (int k = 1; k <= 7; ++k) CHECK(y[k] == Rational(1) / k);
}

TEST_CASE("reciprocal of geometric series is 1-z") {
  S f(6);
  for (int k = 0; k <= 6; ++k) f[k] = 1;
  auto r = reciprocal(f);
  CHECK(r[0] == 1);
  CHECK(r[1] == -1);
  for (int k = 2; k <= 6; ++k) CHECK(r[k] == 0);
}

TEST_CASE("pow with rational exponent: (1-z)^{-1/2}") {
  S f(5);
  f[0] = 1;
  f[1] = -1;
  auto y = pow_series(f, Rational(-1) / 2);
  // central binomial / 4^k
  CHECK(y[0] == 1);
  CHECK(y[1] == Rational(1) / 2);
  CHECK(y[2] == Rational(3) / 8);
  CHECK(y[3] == Rational(5) / 16);
  CHECK(y[4] == Rational(35) / 128);
  CHECK(y[5] == Rational(63) / 256);
}

TEST_CASE("revert of z/(1-z) is z/(1+z)") {
  S f(8);
  for (int k = 1; k <= 8; ++k) f[k] = 1;  // z/(1-z)
  auto fbar = revert(f);
  Rational sign(1);
  CHECK(fbar[0] == 0);
  for (int k = 1; k <= 8; ++k) {
    CHECK(fbar[k] == sign);
    sign = -sign;
  }
}

TEST_CASE("revert of e^z - 1 is log(1+z)") {
  auto e = exp_z(10);
  e[0] = 0;  // e^z - 1
  auto fbar = revert(e);
  Rational sign(1);
  for (int k = 1; k <= 10; ++k) {
    CHECK(fbar[k] == sign / k);
    sign = -sign;
  }
}

TEST_CASE("derivative drops order and scales") {
  S f(4);
  for (int k = 0; k <= 4; ++k) f[k] = Rational(k + 1);
  auto d = derivative(f);
  CHECK(d.order() == 3);
  for (int k = 0; k <= 3; ++k) CHECK(d[k] == Rational((k + 1) * (k + 2)));
}

TEST_CASE("ring laws on random series") {
  const int order = 12;
  for (int trial = 0; trial < 200; ++trial) {
    auto a = rand_series(order), b = rand_series(order), c = rand_series(order);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
  }
}

TEST_CASE("compose associativity with f(0)=0") {
  const int order = 10;
  for (int trial = 0; trial < 50; ++trial) {
    auto g = rand_series(order);
    auto f1 = rand_series(order), f2 = rand_series(order);
    f1[0] = 0;
    f2[0] = 0;
    CHECK(compose(compose(g, f1), f2) == compose(g, compose(f1, f2)));
  }
}

TEST_CASE("reciprocal round-trip") {
  for (int trial = 0; trial < 50; ++trial) {
    auto f = rand_series(10);
    if (f[0] == 0) f[0] = 1;
    S one(10);
    one[0] = 1;
    CHECK(mul(f, reciprocal(f)) == one);
  }
}

TEST_CASE("exp(log) round-trip and pow cancellation") {
  for (int trial = 0; trial < 50; ++trial) {
    auto f = rand_series(10);
    f[0] = 1;
    CHECK(exp_series(log_series(f)) == f);
    Rational alpha = rand_rational();
    S one(10);
    one[0] = 1;
    CHECK(mul(pow_series(f, alpha), pow_series(f, -alpha)) == one);
  }
}

TEST_CASE("pow agrees with repeated multiplication") {
  for (int trial = 0; trial < 20; ++trial) {
    auto f = rand_series(9);
    f[0] = 1;
    auto cube = mul(mul(f, f), f);
    CHECK(pow_series(f, Rational(3)) == cube);
  }
}

TEST_CASE("revert round-trips both ways") {
  for (int trial = 0; trial < 30; ++trial) {
    auto f = rand_series(10);
    f[0] = 0;
    if (f[1] == 0) f[1] = 1;
    auto fbar = revert(f);
    S identity(10);
    identity[1] = 1;
    CHECK(compose(f, fbar) == identity);
    CHECK(compose(fbar, f) == identity);
  }
}

TEST_CASE("real scalar path matches rational") {
  ScopedPrecision guard(128);
  auto f = rand_series(8);
  f[0] = 1;
  auto fr = to_real(f);
  auto lq = log_series(f);
  auto lr = log_series(fr);
  for (int k = 0; k <= 8; ++k)
    CHECK(abs(lr[k] - to_real(lq[k])) < Real("1e-30"));
}
