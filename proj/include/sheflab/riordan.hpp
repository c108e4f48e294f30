#pragma once

#include <stdexcept>
#include <vector>

#include "sheflab/series.hpp"

namespace sheflab {

/// Lower-triangular matrix of an exponential Riordan pair,
/// entries[n][k] = (n!/k!) [z^n] g f^k.
template <class T>
using RiordanMatrix = std::vector<std::vector<T>>;

/// An admissible pair [g, f]: g(0) != 0, f(0) = 0, f'(0) != 0,
/// both truncated at the same order.
template <class T>
struct RiordanPair {
  TruncatedSeries<T> g;
  TruncatedSeries<T> f;

  RiordanPair(TruncatedSeries<T> g_, TruncatedSeries<T> f_)
      : g(std::move(g_)), f(std::move(f_)) {
    detail::check_same_order(g, f);
    if (g[0] == 0) throw std::invalid_argument("riordan pair: g(0) must be nonzero");
    if (!(f[0] == 0)) throw std::invalid_argument("riordan pair: f(0) must be zero");
    if (g.order() >= 1 && f[1] == 0)
      throw std::invalid_argument("riordan pair: f'(0) must be nonzero");
  }

  int order() const { return g.order(); }

  bool operator==(const RiordanPair& o) const { return g == o.g && f == o.f; }
};

/// The identity pair [1, z] at a given order.
template <class T>
RiordanPair<T> identity_pair(int order) {
  TruncatedSeries<T> one(order), z(order);
  one[0] = T(1);
  if (order >= 1) z[1] = T(1);
  return {one, z};
}

/// First n_max+1 rows of the matrix of [g, f].
template <class T>
RiordanMatrix<T> materialize(const RiordanPair<T>& p, int n_max) {
  if (n_max > p.order()) throw std::invalid_argument("materialize: order too small");
  RiordanMatrix<T> d(n_max + 1);
  for (int n = 0; n <= n_max; ++n) d[n].assign(n + 1, T(0));

  std::vector<T> fact(n_max + 1);
  fact[0] = T(1);
  for (int n = 1; n <= n_max; ++n) fact[n] = fact[n - 1] * T(n);

  TruncatedSeries<T> col = p.g;  // g f^k, k = 0,1,...
  for (int k = 0; k <= n_max; ++k) {
    for (int n = k; n <= n_max; ++n) d[n][k] = fact[n] / fact[k] * col[n];
    if (k < n_max) col = mul(col, p.f);
  }
  return d;
}

/// Group law: [g,f][h,l] = [g * h(f), l(f)].
template <class T>
RiordanPair<T> group_mul(const RiordanPair<T>& a, const RiordanPair<T>& b) {
  return {mul(a.g, compose(b.g, a.f)), compose(b.f, a.f)};
}

/// [g,f]^{-1} = [1/(g o fbar), fbar] with fbar = revert(f).
template <class T>
RiordanPair<T> group_inv(const RiordanPair<T>& p) {
  auto fbar = revert(p.f);
  return {reciprocal(compose(p.g, fbar)), fbar};
}

/// The cognate isomorphism phi([g,f]) = [f'/g, f], at order N-1.
template <class T>
RiordanPair<T> cognate_map(const RiordanPair<T>& p) {
  const int n = p.order();
  if (n < 1) throw std::invalid_argument("cognate_map: order must be >= 1");
  auto fp = derivative(p.f);
  auto g = mul(fp, reciprocal(p.g.truncated(n - 1)));
  return {g, p.f.truncated(n - 1)};
}

}  // namespace sheflab
