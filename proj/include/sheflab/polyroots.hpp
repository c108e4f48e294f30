#pragma once

#include <functional>
#include <vector>

#include "sheflab/complexnum.hpp"
#include "sheflab/polynomial.hpp"

namespace sheflab {

/// All complex zeros of a polynomial, with multiplicity, plus per-root
/// residual certificates: |P(r)| / (||P||_1 * max(1,|r|)^deg).
struct RootSet {
  std::vector<Complex> roots;
  std::vector<Real> residuals;
  std::vector<Real> errors;        // per-root forward error estimate
  std::vector<int> multiplicity;   // declared cluster size containing this root
  unsigned precision_bits = 0;
  bool converged = false;          // all residuals <= cert_tol

  Real max_residual() const;
};

struct RootOptions {
  double cert_tol = 1e-30;     // normalized residual certificate
  unsigned start_bits = 128;
  unsigned max_bits = 4096;
  int max_sweeps = 400;
};

/// Coefficients (ascending, leading nonzero) evaluated at a requested
/// working precision; called again on every precision escalation so exact
/// inputs can be re-rounded instead of re-used.
using CoeffProvider = std::function<std::vector<Complex>(unsigned bits)>;

/// Aberth-Ehrlich simultaneous iteration from a circle of initial guesses,
/// doubling the working precision until every residual passes cert_tol or
/// the precision ceiling is hit (partial result flagged via `converged`).
RootSet find_roots(const CoeffProvider& provider, const RootOptions& opts = {});

RootSet find_roots(const DensePolynomial<Rational>& p, const RootOptions& opts = {});
RootSet find_roots(const DensePolynomial<Real>& p, const RootOptions& opts = {});
RootSet find_roots(const std::vector<Complex>& coeffs, const RootOptions& opts = {});

}  // namespace sheflab
