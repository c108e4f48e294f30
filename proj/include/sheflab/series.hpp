#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sheflab/scalar.hpp"

namespace sheflab {

/// Formal power series truncated at a fixed order N, stored as ordinary
/// coefficients of z^0..z^N over a scalar field T (Rational or Real).
/// All operations are exact through z^N and make no claim beyond it.
template <class T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(order + 1, T(0)) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
  }
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs >= 1 coefficient");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int k) const { return coeffs_[k]; }
  T& operator[](int k) { return coeffs_[k]; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

  /// g(-z)
  TruncatedSeries reflected() const {
    TruncatedSeries r = *this;
    for (int k = 1; k <= order(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
  }

  TruncatedSeries truncated(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

 private:
  std::vector<T> coeffs_;
};

namespace detail {
template <class T>
void check_same_order(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
}
}  // namespace detail

template <class T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::check_same_order(a, b);
  TruncatedSeries<T> c = a;
  for (int k = 0; k <= a.order(); ++k) c[k] += b[k];
  return c;
}

template <class T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::check_same_order(a, b);
  TruncatedSeries<T> c = a;
  for (int k = 0; k <= a.order(); ++k) c[k] -= b[k];
  return c;
}

template <class T>
TruncatedSeries<T> operator*(const T& s, const TruncatedSeries<T>& a) {
  TruncatedSeries<T> c = a;
  for (int k = 0; k <= a.order(); ++k) c[k] *= s;
  return c;
}

/// Cauchy product truncated at the common order.
template <class T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::check_same_order(a, b);
  const int n = a.order();
  TruncatedSeries<T> c(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j + i <= n; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

/// g(f(z)) by Horner accumulation in the series ring; requires f(0)=0.
template <class T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& g, const TruncatedSeries<T>& f) {
  detail::check_same_order(g, f);
  if (!(f[0] == 0)) throw std::invalid_argument("compose: inner series must have f(0)=0");
  const int n = g.order();
  TruncatedSeries<T> acc(n);
  acc[0] = g[n];
  for (int k = n - 1; k >= 0; --k) {
    acc = mul(acc, f);
    acc[0] += g[k];
  }
  return acc;
}

/// Termwise derivative; drops the order by one.
template <class T>
TruncatedSeries<T> derivative(const TruncatedSeries<T>& f) {
  if (f.order() == 0) throw std::invalid_argument("derivative: order 0 series");
  TruncatedSeries<T> d(f.order() - 1);
  for (int k = 1; k <= f.order(); ++k) d[k - 1] = T(k) * f[k];
  return d;
}

/// Multiplicative inverse; requires f(0) != 0.
template <class T>
TruncatedSeries<T> reciprocal(const TruncatedSeries<T>& f) {
  if (f[0] == 0) throw std::invalid_argument("reciprocal: zero constant term");
  const int n = f.order();
  TruncatedSeries<T> y(n);
  y[0] = T(1) / f[0];
  for (int k = 1; k <= n; ++k) {
    T s(0);
    for (int j = 1; j <= k; ++j) s += f[j] * y[k - j];
    y[k] = -s / f[0];
  }
  return y;
}

/// exp(f) for f(0)=0, via y' = f' y.
template <class T>
TruncatedSeries<T> exp_series(const TruncatedSeries<T>& f) {
  if (!(f[0] == 0)) throw std::invalid_argument("exp: requires f(0)=0");
  const int n = f.order();
  TruncatedSeries<T> y(n);
  y[0] = T(1);
  for (int k = 1; k <= n; ++k) {
    T s(0);
    for (int j = 1; j <= k; ++j) s += T(j) * f[j] * y[k - j];
    y[k] = s / T(k);
  }
  return y;
}

/// log(f) for f(0)=1, via y' = f'/f.
template <class T>
TruncatedSeries<T> log_series(const TruncatedSeries<T>& f) {
  if (!(f[0] == 1)) throw std::invalid_argument("log: requires f(0)=1");
  const int n = f.order();
  TruncatedSeries<T> y(n);
  for (int k = 1; k <= n; ++k) {
    T s(0);
    for (int j = 1; j < k; ++j) s += T(j) * y[j] * f[k - j];
    y[k] = f[k] - s / T(k);
  }
  return y;
}

/// f^alpha for f(0)=1 via the first-order recurrence f y' = alpha f' y,
/// so a rational exponent keeps rational coefficients.
template <class T>
TruncatedSeries<T> pow_series(const TruncatedSeries<T>& f, const T& alpha) {
  if (!(f[0] == 1)) throw std::invalid_argument("pow: requires f(0)=1");
  const int n = f.order();
  TruncatedSeries<T> y(n);
  y[0] = T(1);
  for (int k = 1; k <= n; ++k) {
    T s(0);
    for (int j = 1; j <= k; ++j) s += ((alpha + T(1)) * T(j) - T(k)) * f[j] * y[k - j];
    y[k] = s / T(k);
  }
  return y;
}

/// Compositional inverse: the series fbar with f(fbar(z)) = z through order N.
/// Requires f(0)=0 and f'(0) != 0. Newton iteration on g -> g - (f(g)-z)/f'(g).
template <class T>
TruncatedSeries<T> revert(const TruncatedSeries<T>& f) {
  if (!(f[0] == 0)) throw std::invalid_argument("revert: requires f(0)=0");
  if (f[1] == 0) throw std::invalid_argument("revert: zero linear coefficient");
  const int n = f.order();
  TruncatedSeries<T> identity(n);
  if (n >= 1) identity[1] = T(1);
  if (n == 0) return identity;

  TruncatedSeries<T> fprime(n);  // f' padded back to order n
  {
    auto d = derivative(f);
    for (int k = 0; k <= n - 1; ++k) fprime[k] = d[k];
  }
  TruncatedSeries<T> g(n);
  g[1] = T(1) / f[1];
  // each step at least doubles the number of correct coefficients
  int steps = 1;
  while ((1 << steps) < n + 1) ++steps;
  for (int it = 0; it <= steps; ++it) {
    auto err = compose(f, g) - identity;
    bool zero = true;
    for (int k = 0; k <= n; ++k)
      if (!(err[k] == 0)) { zero = false; break; }
    if (zero) break;
    g = g - mul(err, reciprocal(compose(fprime, g)));
  }
  return g;
}

/// Convert a rational series to Real at the current working precision.
inline TruncatedSeries<Real> to_real(const TruncatedSeries<Rational>& f) {
  std::vector<Real> c(f.order() + 1);
  for (int k = 0; k <= f.order(); ++k) c[k] = to_real(f[k]);
  return TruncatedSeries<Real>(std::move(c));
}
inline const TruncatedSeries<Real>& to_real(const TruncatedSeries<Real>& f) { return f; }

}  // namespace sheflab
