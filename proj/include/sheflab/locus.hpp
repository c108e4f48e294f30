#pragma once

#include <optional>
#include <vector>

#include "sheflab/polyroots.hpp"
#include "sheflab/series.hpp"

namespace sheflab {

/// Partition of a root multiset against a vertical line Re s = c and the
/// real axis. A root close to both (i.e. near c itself) is counted on_line
/// and listed in flagged_center.
struct LocusReport {
  std::vector<Complex> on_line;
  std::vector<Complex> real_axis;
  std::vector<Complex> other;
  std::vector<Complex> flagged_center;
  Real line_c;
  Real tol;
};

/// Scale-aware default tolerance: 1e-12 * (1 + max |root|).
Real default_locus_tol(const RootSet& r);

LocusReport classify(const RootSet& r, const Real& c, const Real& tol);

struct SymmetryResult {
  bool symmetric = false;
  Real max_mismatch;
};

/// True iff the root multiset is invariant under s -> -m - s within tol
/// (greedy nearest pairing, lexicographic tie-break).
SymmetryResult check_line_symmetry(const RootSet& r, const Real& m, const Real& tol);

struct HalfplaneTestResult {
  bool precondition_ok = false;  // all roots of G strictly above the real axis
  bool all_real = false;         // all roots of G + conj(G) real within tol
};

/// Randomized check that G + Gbar has only real zeros whenever every zero
/// of G has positive imaginary part. Gbar has conjugated coefficients.
HalfplaneTestResult upper_halfplane_sum_test(const std::vector<Complex>& g_coeffs,
                                             const RootOptions& opts = {});

/// Exact coefficientwise verification of G(-s) = (-1)^n G(s - m).
template <class T>
bool check_reflection_identity(const DensePolynomial<T>& g, const T& m) {
  auto lhs = g.negated_argument();
  auto rhs = g.shifted(-m);
  if (g.degree() % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

/// Exact check of the zero-symmetry functional equation for an Appell
/// weight: g(z) = g(-z) e^{lambda z} with lambda = 2 g'(0)/g(0). The raw
/// exponent g'(0) only matches when g(0) = 2; the logarithmic-derivative
/// form holds for every admissible normalization.
template <class T>
bool check_appell_condition(const TruncatedSeries<T>& g) {
  if (g[0] == 0) throw std::invalid_argument("check_appell_condition: g(0) must be nonzero");
  if (g.order() < 1) return true;
  T lambda = 2 * g[1] / g[0];
  TruncatedSeries<T> lz(g.order());
  lz[1] = lambda;
  return g == mul(g.reflected(), exp_series(lz));
}

/// The symmetry-line exponent lambda = 2 g'(0)/g(0); the Appell sequence for
/// (g, az) has zeros symmetric about Re s = -lambda/(2a) when the condition
/// above holds.
template <class T>
T appell_symmetry_exponent(const TruncatedSeries<T>& g) {
  if (g[0] == 0) throw std::invalid_argument("appell_symmetry_exponent: g(0) must be nonzero");
  if (g.order() < 1) return T(0);
  return 2 * g[1] / g[0];
}

template <class T>
struct TanhDecomposition {
  TruncatedSeries<T> rho;  // even part, rho(0) = 1
  T k;                     // g = (g(0)/2) * 2 rho(z) (1 + tanh(k z))
};

/// tanh(k z) as a truncated series (exact for rational k).
template <class T>
TruncatedSeries<T> tanh_series(const T& k, int order) {
  TruncatedSeries<T> two_kz(order);
  if (order >= 1) two_kz[1] = 2 * k;
  auto e = exp_series(two_kz);  // e^{2kz}
  e[0] += T(1);
  auto r = reciprocal(e);
  TruncatedSeries<T> one(order);
  one[0] = T(1);
  return one - (T(2) * r);  // 1 - 2/(e^{2kz}+1)
}

/// Split g (up to a constant) as 2 rho(z)(1 + tanh(k z)) with rho even and
/// rho(0)=1. Succeeds exactly when check_appell_condition(g) holds.
template <class T>
std::optional<TanhDecomposition<T>> tanh_decompose(const TruncatedSeries<T>& g) {
  if (g[0] == 0) throw std::invalid_argument("tanh_decompose: g(0) must be nonzero");
  const int n = g.order();
  auto gn = (T(2) / g[0]) * g;  // normalized: gn(0) = 2
  T k = n >= 1 ? gn[1] / T(2) : T(0);
  auto rho = (T(1) / T(4)) * (gn + gn.reflected());
  TruncatedSeries<T> one(n);
  one[0] = T(1);
  auto recon = mul(T(2) * rho, one + tanh_series(k, n));
  if (!(recon == gn)) return std::nullopt;
  return TanhDecomposition<T>{rho, k};
}

}  // namespace sheflab
