#pragma once

#include "sheflab/scalar.hpp"

namespace sheflab {

/// Arbitrary-precision complex number over Real. Principal branches for
/// sqrt/log/arg (cut along the negative real axis).
struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(int r) : re(r), im(0) {}

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex& operator+=(const Complex& b) { re += b.re; im += b.im; return *this; }
  Complex& operator-=(const Complex& b) { re -= b.re; im -= b.im; return *this; }
  Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }

inline Complex sqrt(const Complex& a) {
  if (a.im == 0) {
    if (a.re >= 0) return {sqrt(a.re), Real(0)};
    return {Real(0), sqrt(-a.re)};
  }
  Real r = abs(a);
  Real u = sqrt((r + a.re) / 2);
  Real v = sqrt((r - a.re) / 2);
  if (a.im < 0) v = -v;
  return {u, v};
}

inline Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }

inline Complex exp(const Complex& a) {
  Real m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}

inline Complex pow(const Complex& a, const Real& alpha) {
  return exp(Complex(alpha) * log(a));
}

}  // namespace sheflab
