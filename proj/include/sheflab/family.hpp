#pragma once

#include <vector>

#include "sheflab/locus.hpp"
#include "sheflab/polyroots.hpp"
#include "sheflab/sheffer.hpp"

namespace sheflab {

/// Parameters of the Sheffer family with weight
///   h(z) = (z1-z)^p (z1+z)^{p*} (z2-z)^q (z2+z)^{q*} prod_i (alpha_i - z^2)^{p_i}
/// and kernel f(z) = Log(z1-z)+Log(z2-z)-Log(z1+z)-Log(z2+z).
/// The symmetry center c is always derived as (p* - p)/2.
struct FamilyParams {
  Rational z1, z2;
  Rational p, p_star, q, q_star;
  std::vector<Rational> alphas;
  std::vector<Rational> p_is;

  Rational c() const { return (p_star - p) / 2; }

  void validate() const {
    if (!(z1 > 0 && z2 > z1)) throw std::invalid_argument("family: need z2 > z1 > 0");
    if (p_star - p != q_star - q)
      throw std::invalid_argument("family: need p* - p == q* - q");
    if (alphas.size() != p_is.size())
      throw std::invalid_argument("family: alphas and p_is must have equal length");
    for (const auto& a : alphas)
      if (!(a > z1 * z1)) throw std::invalid_argument("family: need alpha_i > z1^2");
  }
};

/// Critical normalized heights bounding the saddle curve.
struct CriticalParams {
  Real T1, T2, T;
  bool regime_T1 = false;  // true when z1^2 - 6 z1 z2 + z2^2 >= 0
};

struct SaddlePoint {
  Real t;
  Complex zeta;
  Real residual;  // |phi_z(zeta, t)| with phi_z(z,t) = 1/z - i t f'(z)
};

namespace detail {
template <class T>
T from_rational(const Rational& q);
template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
inline Real from_rational<Real>(const Rational& q) { return to_real(q); }
}  // namespace detail

template <class T>
struct FamilyPair {
  ShefferPair<T> pair;
  Real scale;  // positive constant split off h; rescales H_n without moving zeros
};

/// Expand the family pair at a truncation order. The constant factor
/// z1^{p+p*} z2^{q+q*} prod alpha_i^{p_i} is extracted into `scale` so the
/// series part has constant term 1 and stays rational for rational input.
template <class T>
FamilyPair<T> build_pair(const FamilyParams& fp, int order) {
  fp.validate();
  using S = TruncatedSeries<T>;
  const T z1 = detail::from_rational<T>(fp.z1);
  const T z2 = detail::from_rational<T>(fp.z2);

  auto linear = [&](const T& sign_over_z, const Rational& expo) {
    S base(order);
    base[0] = T(1);
    if (order >= 1) base[1] = sign_over_z;
    return pow_series(base, detail::from_rational<T>(expo));
  };

  S h = linear(-T(1) / z1, fp.p);
  h = mul(h, linear(T(1) / z1, fp.p_star));
  h = mul(h, linear(-T(1) / z2, fp.q));
  h = mul(h, linear(T(1) / z2, fp.q_star));
  for (size_t i = 0; i < fp.alphas.size(); ++i) {
    S base(order);
    base[0] = T(1);
    if (order >= 2) base[2] = -T(1) / detail::from_rational<T>(fp.alphas[i]);
    h = mul(h, pow_series(base, detail::from_rational<T>(fp.p_is[i])));
  }

  S f(order);
  T a1 = T(1), a2 = T(1);  // z1^-n, z2^-n
  for (int n = 1; n <= order; ++n) {
    a1 /= z1;
    a2 /= z2;
    if (n % 2 == 1) f[n] = -2 * (a1 + a2) / T(n);
  }

  Real scale = pow(to_real(fp.z1), to_real(fp.p + fp.p_star)) *
               pow(to_real(fp.z2), to_real(fp.q + fp.q_star));
  for (size_t i = 0; i < fp.alphas.size(); ++i)
    scale *= pow(to_real(fp.alphas[i]), to_real(fp.p_is[i]));

  return {ShefferPair<T>({h, f}, "family"), scale};
}

/// h(z) * ((z1-z)(z2-z)/((z1+z)(z2+z)))^c, which the constraint
/// p* - p == q* - q makes an even series; used as a construction sanity check.
template <class T>
TruncatedSeries<T> even_modification(const FamilyParams& fp, int order) {
  FamilyParams mod = fp;
  const Rational c = fp.c();
  mod.p += c;
  mod.q += c;
  mod.p_star -= c;
  mod.q_star -= c;
  // p* - p and q* - q are now zero; invariants still hold
  return build_pair<T>(mod, order).pair.pair().g;
}

CriticalParams critical_params(const Real& z1, const Real& z2);

/// Saddle point zeta(t) for 0 <= t <= T2, principal branches everywhere.
/// Throws if the residual |phi_z(zeta,t)| exceeds residual_tol (branch
/// mishandling guard).
SaddlePoint saddle_point(const Real& t, const Real& z1, const Real& z2,
                         const Real& residual_tol = Real("1e-25"));

/// Limiting zero-height density at x in (0, T):
/// (1/pi) ln |(z1+zeta)(z2+zeta) / ((z1-zeta)(z2-zeta))|.
Real limiting_density(const Real& x, const Real& z1, const Real& z2);

/// Integral of the limiting density over [a, b] within (0, T); the
/// logarithmic singularity at 0 is handled by substitution.
Real density_integral(const Real& a, const Real& b, const Real& z1, const Real& z2);

/// The 2*ceil(c+p) real-zero limits c +- (c+p+1-k), k = 1..ceil(c+p);
/// empty when c + p <= 0.
std::vector<Rational> predicted_real_limits(const FamilyParams& fp);

struct ExperimentOptions {
  unsigned precision_bits = 256;
  double cert_tol = 1e-30;
  double line_tol_k = 1e-6;  // line tolerance max(1e-8, K/n)
  int exact_parity_max_n = 30;
};

struct ExperimentResult {
  int n = 0;
  DensePolynomial<Real> poly;
  RootSet roots;
  LocusReport locus;
  std::vector<Real> t_values;  // Im(root)/n for on-line roots
  Real line_tol;
  Real line_c;
  bool parity_ok = false;
  bool parity_exact = false;  // exact rational check vs numeric
};

/// Build the degree-n polynomial, locate and classify its zeros against
/// Re s = c, and verify the parity identity H_n(c-x) = (-1)^n H_n(c+x).
ExperimentResult run_experiment(const FamilyParams& fp, int n,
                                const ExperimentOptions& opts = {});

struct DensityBin {
  Real lo, hi;
  Real empirical_mass;  // on-line zero count in bin / n
  Real analytic_mass;   // integral of the limiting density over the bin
};

struct DensityComparison {
  int n = 0;
  std::vector<DensityBin> bins;
  Real l1_distance;
};

/// Histogram of positive normalized zero heights against the bin-integrated
/// limiting density. Throws std::domain_error on an empty on-line set.
DensityComparison empirical_vs_limit(const ExperimentResult& result,
                                     const FamilyParams& fp, int bins);

// Named parameter presets.
FamilyParams example1_left();   // z1=1, z2=7, (p,p*,q,q*) = (4,1,2,-1), (2-z^2)^{-1}
FamilyParams example1_right();  // z1=1, z2=7, (p,p*,q,q*) = (-4,-1,-2,1), (2-z^2)^{-1}

}  // namespace sheflab
