#pragma once

#include <stdexcept>
#include <vector>

#include "sheflab/scalar.hpp"

namespace sheflab {

/// Dense polynomial in s, coefficients ascending by power.
template <class T>
class DensePolynomial {
 public:
  DensePolynomial() : coeffs_(1, T(0)) {}
  explicit DensePolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, T(0));
    trim();
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int k) const { return coeffs_[k]; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  bool operator==(const DensePolynomial& o) const { return coeffs_ == o.coeffs_; }

  template <class U>
  U operator()(const U& s) const {
    U acc(coeffs_.back());
    for (int k = degree() - 1; k >= 0; --k) acc = acc * s + U(coeffs_[k]);
    return acc;
  }

  /// P(-s)
  DensePolynomial negated_argument() const {
    auto c = coeffs_;
    for (size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return DensePolynomial(std::move(c));
  }

  /// P(s + a), exact Taylor shift.
  DensePolynomial shifted(const T& a) const {
    const int n = degree();
    std::vector<T> c = coeffs_;
    // repeated synthetic division by (s - (-a))
    for (int i = 0; i < n; ++i)
      for (int k = n - 1; k >= i; --k) c[k] += a * c[k + 1];
    return DensePolynomial(std::move(c));
  }

  DensePolynomial operator-() const {
    auto c = coeffs_;
    for (auto& x : c) x = -x;
    return DensePolynomial(std::move(c));
  }

  friend DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return DensePolynomial(std::move(c));
  }
  friend DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
    return a + (-b);
  }
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return DensePolynomial(std::move(c));
  }

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

inline DensePolynomial<Real> to_real(const DensePolynomial<Rational>& p) {
  std::vector<Real> c(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) c[k] = to_real(p[k]);
  return DensePolynomial<Real>(std::move(c));
}
inline const DensePolynomial<Real>& to_real(const DensePolynomial<Real>& p) { return p; }

}  // namespace sheflab
