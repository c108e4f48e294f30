#include "sheflab/polyroots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace sheflab {

namespace {

Real at_current_precision(const Real& x) {
  Real y = x;
  y.precision(Real::default_precision());
  return y;
}

Complex at_current_precision(const Complex& z) {
  return {at_current_precision(z.re), at_current_precision(z.im)};
}

// P and P' at z by a fused Horner pass (ascending coefficients).
void eval_with_derivative(const std::vector<Complex>& c, const Complex& z,
                          Complex& p, Complex& dp) {
  const int n = static_cast<int>(c.size()) - 1;
  p = c[n];
  dp = Complex(0);
  for (int k = n - 1; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

Real one_norm(const std::vector<Complex>& c) {
  Real s(0);
  for (const auto& x : c) s += abs(x);
  return s;
}

Real normalized_residual(const std::vector<Complex>& c, const Real& norm1,
                         const Complex& r) {
  const int deg = static_cast<int>(c.size()) - 1;
  Complex p = c[deg];
  for (int k = deg - 1; k >= 0; --k) p = p * r + c[k];
  Real scale = norm1;
  Real m = abs(r);
  if (m > 1) scale *= pow(m, deg);
  return abs(p) / scale;
}

// Merge roots closer than 10x their combined error estimates into a
// cluster centroid with declared multiplicity.
void declare_multiplicities(RootSet& rs) {
  const size_t n = rs.roots.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (abs(rs.roots[i] - rs.roots[j]) < 10 * (rs.errors[i] + rs.errors[j]))
        parent[find(i)] = find(j);

  std::vector<std::vector<size_t>> clusters(n);
  for (size_t i = 0; i < n; ++i) clusters[find(i)].push_back(i);
  for (const auto& cl : clusters) {
    if (cl.size() < 2) continue;
    Complex centroid(0);
    for (size_t i : cl) centroid += rs.roots[i];
    centroid = centroid / Complex(Real(static_cast<int>(cl.size())));
    for (size_t i : cl) {
      rs.roots[i] = centroid;
      rs.multiplicity[i] = static_cast<int>(cl.size());
    }
  }
}

}  // namespace

Real RootSet::max_residual() const {
  Real m(0);
  for (const auto& r : residuals) m = std::max(m, r);
  return m;
}

RootSet find_roots(const CoeffProvider& provider, const RootOptions& opts) {
  RootSet best;
  std::vector<Complex> warm;

  for (unsigned bits = opts.start_bits; bits <= opts.max_bits; bits *= 2) {
    ScopedPrecision guard(bits);
    std::vector<Complex> coeffs = provider(bits);
    while (coeffs.size() > 1 && abs(coeffs.back()) == 0) coeffs.pop_back();
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) throw std::invalid_argument("find_roots: degree must be >= 1");

    // monic copy for the iteration
    std::vector<Complex> m(coeffs);
    for (auto& x : m) x = x / coeffs.back();

    std::vector<Complex> z(deg);
    if (static_cast<int>(warm.size()) == deg) {
      for (int i = 0; i < deg; ++i) z[i] = at_current_precision(warm[i]);
    } else {
      // circle of radius 1+|c_{n-1}| with an irrational angular offset
      Real radius = 1 + abs(m[deg - 1]);
      Real two_pi = 2 * boost::math::constants::pi<Real>();
      for (int i = 0; i < deg; ++i) {
        Real theta = two_pi * Real(i) / Real(deg) + Real("0.73908513321516064");
        z[i] = Complex(radius * cos(theta), radius * sin(theta));
      }
    }

    const Real stop = pow(Real(2), -static_cast<int>(bits) + 16);
    std::vector<Real> corr(deg, Real(1));
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
      Real max_rel(0);
      for (int i = 0; i < deg; ++i) {
        Complex p, dp;
        eval_with_derivative(m, z[i], p, dp);
        if (abs(p) == 0) { corr[i] = 0; continue; }
        Complex newton = (abs(dp) == 0) ? Complex(stop) : p / dp;
        Complex sum(0);
        for (int j = 0; j < deg; ++j) {
          if (j == i) continue;
          Complex d = z[i] - z[j];
          if (abs(d) == 0) d = Complex(stop * (1 + abs(z[i])));
          sum += Complex(Real(1)) / d;
        }
        Complex denom = Complex(Real(1)) - newton * sum;
        Complex w = (abs(denom) == 0) ? newton : newton / denom;
        z[i] -= w;
        corr[i] = abs(w);
        max_rel = std::max(max_rel, corr[i] / (1 + abs(z[i])));
      }
      if (max_rel < stop) break;
    }

    RootSet rs;
    rs.precision_bits = bits;
    rs.roots = z;
    rs.residuals.resize(deg);
    rs.errors.resize(deg);
    rs.multiplicity.assign(deg, 1);
    const Real norm1 = one_norm(coeffs);
    const Real floor_err = pow(Real(2), -static_cast<int>(bits) + 24);
    bool ok = true;
    for (int i = 0; i < deg; ++i) {
      rs.residuals[i] = normalized_residual(coeffs, norm1, z[i]);
      rs.errors[i] = corr[i] + floor_err * (1 + abs(z[i]));
      if (!(rs.residuals[i] <= Real(opts.cert_tol))) ok = false;
    }
    rs.converged = ok;
    if (ok) {
      declare_multiplicities(rs);
      return rs;
    }
    warm = z;
    best = std::move(rs);
  }
  declare_multiplicities(best);
  return best;  // partial set, converged == false
}

RootSet find_roots(const DensePolynomial<Rational>& p, const RootOptions& opts) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");
  return find_roots(
      [&p](unsigned) {
        std::vector<Complex> c(p.degree() + 1);
        for (int k = 0; k <= p.degree(); ++k) c[k] = Complex(to_real(p[k]));
        return c;
      },
      opts);
}

RootSet find_roots(const DensePolynomial<Real>& p, const RootOptions& opts) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");
  return find_roots(
      [&p](unsigned) {
        std::vector<Complex> c(p.degree() + 1);
        for (int k = 0; k <= p.degree(); ++k) c[k] = Complex(at_current_precision(p[k]));
        return c;
      },
      opts);
}

RootSet find_roots(const std::vector<Complex>& coeffs, const RootOptions& opts) {
  return find_roots(
      [&coeffs](unsigned) {
        std::vector<Complex> c(coeffs.size());
        for (size_t k = 0; k < coeffs.size(); ++k) c[k] = at_current_precision(coeffs[k]);
        return c;
      },
      opts);
}

}  // namespace sheflab
