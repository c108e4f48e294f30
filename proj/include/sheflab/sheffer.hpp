#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "sheflab/polynomial.hpp"
#include "sheflab/riordan.hpp"

namespace sheflab {

/// A labelled Riordan pair generating the Sheffer sequence g(z) e^{s f(z)}.
/// The coefficient matrix is materialized lazily and cached; the cache is
/// safe for concurrent lookup.
template <class T>
class ShefferPair {
 public:
  ShefferPair(RiordanPair<T> pair, std::string label = {})
      : pair_(std::move(pair)), label_(std::move(label)),
        cache_(std::make_shared<Cache>()) {}

  const RiordanPair<T>& pair() const { return pair_; }
  const std::string& label() const { return label_; }
  int order() const { return pair_.order(); }

  const RiordanMatrix<T>& matrix(int n_max) const {
    if (n_max > pair_.order()) throw std::invalid_argument("sheffer: order too small");
    std::lock_guard<std::mutex> lock(cache_->m);
    if (static_cast<int>(cache_->rows.size()) < n_max + 1)
      cache_->rows = materialize(pair_, n_max);
    return cache_->rows;
  }

 private:
  struct Cache {
    std::mutex m;
    RiordanMatrix<T> rows;
  };
  RiordanPair<T> pair_;
  std::string label_;
  std::shared_ptr<Cache> cache_;
};

/// The n-th Sheffer polynomial G_n(s): row n of the pair's matrix.
template <class T>
DensePolynomial<T> sheffer_poly(const ShefferPair<T>& p, int n) {
  if (n > p.order()) throw std::invalid_argument("sheffer_poly: order too small");
  return DensePolynomial<T>(p.matrix(n)[n]);
}

/// The n-th cognate polynomial: the Sheffer polynomial of [f'/g, f].
template <class T>
DensePolynomial<T> cognate_poly(const ShefferPair<T>& p, int n) {
  if (n > p.order() - 1) throw std::invalid_argument("cognate_poly: order too small");
  ShefferPair<T> c(cognate_map(p.pair()), p.label().empty() ? "" : p.label() + "-cognate");
  return sheffer_poly(c, n);
}

/// Umbral composition (G o H)_n = sum_k a_{n,k} H_k(s). Equals the Sheffer
/// polynomial of the group product of the two pairs.
template <class T>
DensePolynomial<T> umbral_compose(const ShefferPair<T>& a, const ShefferPair<T>& b, int n) {
  detail::check_same_order(a.pair().g, b.pair().g);
  if (n > a.order()) throw std::invalid_argument("umbral_compose: order too small");
  const auto& am = a.matrix(n);
  DensePolynomial<T> acc;
  for (int k = 0; k <= n; ++k) {
    if (am[n][k] == 0) continue;
    acc = acc + DensePolynomial<T>({am[n][k]}) * sheffer_poly(b, k);
  }
  return acc;
}

/// For an Appell pair (g, cz): (g, a*c*z), whose n-th polynomial is the
/// original one evaluated at a*s.
template <class T>
ShefferPair<T> scale_variable(const ShefferPair<T>& p, const T& a) {
  if (a == 0) throw std::invalid_argument("scale_variable: a must be nonzero");
  const auto& f = p.pair().f;
  for (int k = 2; k <= f.order(); ++k)
    if (!(f[k] == 0)) throw std::invalid_argument("scale_variable: pair is not Appell");
  return ShefferPair<T>({p.pair().g, a * f}, p.label());
}

// ---- classical pairs (exact rational series) -------------------------------

/// Bernoulli pair (z/(e^z - 1), z).
inline ShefferPair<Rational> bernoulli_pair(int order) {
  // (e^z - 1)/z has ordinary coefficients 1/(k+1)!
  TruncatedSeries<Rational> e(order);
  Rational fact(1);
  for (int k = 0; k <= order; ++k) {
    fact *= Rational(k + 1);
    e[k] = Rational(1) / fact;
  }
  TruncatedSeries<Rational> z(order);
  if (order >= 1) z[1] = 1;
  return {{reciprocal(e), z}, "bernoulli"};
}

/// The cognate of the Bernoulli pair, ((e^z - 1)/z, z).
inline ShefferPair<Rational> bernoulli_cognate_pair(int order) {
  return {cognate_map(bernoulli_pair(order + 1).pair()), "bernoulli-cognate"};
}

/// Euler pair (2/(e^z + 1), z).
inline ShefferPair<Rational> euler_pair(int order) {
  // (e^z + 1)/2 = 1 + sum_{k>=1} z^k/(2 k!)
  TruncatedSeries<Rational> e(order);
  e[0] = 1;
  Rational fact(1);
  for (int k = 1; k <= order; ++k) {
    fact *= Rational(k);
    e[k] = Rational(1) / (2 * fact);
  }
  TruncatedSeries<Rational> z(order);
  if (order >= 1) z[1] = 1;
  return {{reciprocal(e), z}, "euler"};
}

/// Hermite pair (e^{-z^2}, 2z).
inline ShefferPair<Rational> hermite_pair(int order) {
  TruncatedSeries<Rational> g(order);
  Rational fact(1), sign(1);
  g[0] = 1;
  for (int k = 1; 2 * k <= order; ++k) {
    fact *= Rational(k);
    sign = -sign;
    g[2 * k] = sign / fact;
  }
  TruncatedSeries<Rational> f(order);
  if (order >= 1) f[1] = 2;
  return {{g, f}, "hermite"};
}

/// Monomial pair (1, z); its Sheffer sequence is {s^n}.
inline ShefferPair<Rational> monomial_pair(int order) {
  return {identity_pair<Rational>(order), "monomials"};
}

}  // namespace sheflab
