#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace sheflab {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Arbitrary-precision real. Precision is per-value; fresh values pick up
// the thread's current default precision (see ScopedPrecision).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline unsigned digits_for_bits(unsigned bits) {
  // decimal digits that guarantee at least `bits` bits of mantissa
  return static_cast<unsigned>(bits * 0.3010299956639812) + 2;
}

// RAII guard: set the default working precision (in bits) for Real values
// created in this scope, restore on exit.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits_for_bits(bits));
  }
  ~ScopedPrecision() { Real::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const Rational& q) {
  return Real(numerator(q)) / Real(denominator(q));
}
inline Real to_real(const Real& x) { return x; }

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Real& x) {
  return x.str(0, std::ios_base::scientific);
}

}  // namespace sheflab
