#include "sheflab/family.hpp"

#include <boost/math/constants/constants.hpp>

#include <optional>
#include <stdexcept>

namespace sheflab {

namespace {

// The analytic routines need real working precision regardless of the
// ambient default; raise it to at least `bits` for the enclosing scope.
struct MinPrecision {
  std::optional<ScopedPrecision> guard;
  explicit MinPrecision(unsigned bits) {
    if (Real::default_precision() < digits_for_bits(bits)) guard.emplace(bits);
  }
};

}  // namespace

CriticalParams critical_params(const Real& z1, const Real& z2) {
  if (!(z1 > 0 && z2 > z1)) throw std::invalid_argument("critical_params: need z2 > z1 > 0");
  MinPrecision min_prec(256);
  CriticalParams cp;
  cp.T1 = (z2 - z1) / (z1 + z2);
  cp.T2 = (z1 + z2) / (4 * sqrt(z1 * z2));
  cp.regime_T1 = z1 * z1 - 6 * z1 * z2 + z2 * z2 >= 0;
  cp.T = cp.regime_T1 ? cp.T1 : cp.T2;
  return cp;
}

namespace {

Complex f_prime(const Complex& z, const Real& z1, const Real& z2) {
  const Complex one(Real(1));
  return -(one / (Complex(z1) - z) + one / (Complex(z2) - z) +
           one / (Complex(z1) + z) + one / (Complex(z2) + z));
}

}  // namespace

SaddlePoint saddle_point(const Real& t, const Real& z1, const Real& z2,
                         const Real& residual_tol) {
  MinPrecision min_prec(256);
  const auto cp = critical_params(z1, z2);
  if (t < 0 || t > cp.T2) throw std::invalid_argument("saddle_point: t outside [0, T2]");

  const Real half_sum = (z1 + z2) / 2;
  Complex zeta;
  if (t < cp.T1) {
    Real root = sqrt(cp.T1 * cp.T1 - t * t);
    Complex inner = sqrt(Complex(1 - 2 * t * t, -2 * t * root));
    zeta = Complex(half_sum) * (Complex(-root, t) + inner);
  } else {
    Real root = sqrt(t * t - cp.T1 * cp.T1);
    Complex inner = sqrt(Complex(1 - 2 * t * t - 2 * t * root, Real(0)));
    zeta = Complex(half_sum) * (Complex(Real(0), t + root) + inner);
  }

  SaddlePoint sp;
  sp.t = t;
  sp.zeta = zeta;
  // At t = 0 the curve leaves from the pole z1, where f' blows up; the
  // residual there measures the boundary identity zeta(0) = z1 instead.
  if (t == 0)
    sp.residual = abs(zeta - Complex(z1));
  else
    sp.residual = abs(Complex(Real(1)) / zeta - Complex(Real(0), t) * f_prime(zeta, z1, z2));
  if (!(sp.residual < residual_tol))
    throw std::runtime_error("saddle_point: residual " + sp.residual.str(6) +
                             " exceeds tolerance at t = " + t.str(10));
  return sp;
}

Real limiting_density(const Real& x, const Real& z1, const Real& z2) {
  MinPrecision min_prec(256);
  const auto cp = critical_params(z1, z2);
  if (!(x > 0 && x < cp.T)) throw std::invalid_argument("limiting_density: x outside (0, T)");
  const Complex z = saddle_point(x, z1, z2).zeta;
  const Complex num = (Complex(z1) + z) * (Complex(z2) + z);
  const Complex den = (Complex(z1) - z) * (Complex(z2) - z);
  return log(abs(num) / abs(den)) / boost::math::constants::pi<Real>();
}

namespace {

// adaptive Simpson on a smooth integrand
template <class F>
Real simpson(const F& f, const Real& a, const Real& b, const Real& fa, const Real& fm,
             const Real& fb, const Real& whole, const Real& tol, int depth) {
  Real m = (a + b) / 2;
  Real lm = (a + m) / 2, rm = (m + b) / 2;
  Real flm = f(lm), frm = f(rm);
  Real left = (m - a) / 6 * (fa + 4 * flm + fm);
  Real right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || abs(left + right - whole) <= 15 * tol)
    return left + right + (left + right - whole) / 15;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

template <class F>
Real integrate(const F& f, const Real& a, const Real& b, const Real& tol) {
  if (!(b > a)) return Real(0);
  Real m = (a + b) / 2;
  Real fa = f(a), fm = f(m), fb = f(b);
  Real whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

Real density_integral(const Real& a, const Real& b_in, const Real& z1, const Real& z2) {
  MinPrecision min_prec(256);
  const auto cp = critical_params(z1, z2);
  Real b = b_in;
  // a caller may hold T at lower precision; snap near-T endpoints to T
  if (b > cp.T && b - cp.T < cp.T * Real("1e-10")) b = cp.T;
  if (a < 0 || b > cp.T || b < a) throw std::invalid_argument("density_integral: bad range");
  const Real tol("1e-10");
  auto dens = [&](const Real& x) { return limiting_density(x, z1, z2); };

  Real total(0);
  Real lo = a;
  const Real delta = cp.T / 100;  // log singularity guard near 0
  if (lo == 0) {
    Real cut = b < delta ? b : delta;
    // x = delta u^2 flattens the ln(1/x) blow-up
    auto sub = [&](const Real& u) {
      if (u == 0) return Real(0);
      return dens(delta * u * u) * 2 * delta * u;
    };
    total += integrate(sub, Real(0), sqrt(cut / delta), tol);
    lo = cut;
  }
  // the density vanishes at T; stop a hair early to stay in the open domain
  Real hi = b;
  if (hi == cp.T) {
    Real eps = cp.T * Real("1e-30");
    hi -= eps;
  }
  if (hi > lo) total += integrate(dens, lo, hi, tol);
  return total;
}

std::vector<Rational> predicted_real_limits(const FamilyParams& fp) {
  const Rational cp = fp.c() + fp.p;
  std::vector<Rational> out;
  if (!(cp > 0)) return out;
  // ceil(c+p) for positive rational
  Rational ceil_cp = Rational(numerator(cp) / denominator(cp));
  if (ceil_cp * denominator(cp) != numerator(cp)) ceil_cp += 1;
  for (Rational k = 1; k <= ceil_cp; k += 1) {
    out.push_back(fp.c() + (cp + 1 - k));
    out.push_back(fp.c() - (cp + 1 - k));
  }
  return out;
}

namespace {

bool parity_holds_exact(const FamilyParams& fp, int n) {
  auto built = build_pair<Rational>(fp, n);
  auto h = sheffer_poly(built.pair, n);
  auto g = h.shifted(fp.c());  // H_n(c + x) as a polynomial in x
  return check_reflection_identity(g, Rational(0));
}

bool parity_holds_numeric(const DensePolynomial<Real>& h, const Rational& c, unsigned bits) {
  auto g = h.shifted(to_real(c));
  Real max_coeff(0), max_dev(0);
  for (int k = 0; k <= g.degree(); ++k) max_coeff = std::max(max_coeff, abs(g[k]));
  const int n = g.degree();
  for (int k = 0; k <= n; ++k) {
    // G(-x) - (-1)^n G(x): coefficient k is ((-1)^k - (-1)^n) g_k
    if ((k % 2) != (n % 2)) max_dev = std::max(max_dev, abs(g[k]));
  }
  return max_dev <= max_coeff * pow(Real(2), -static_cast<int>(bits) / 2);
}

}  // namespace

ExperimentResult run_experiment(const FamilyParams& fp, int n, const ExperimentOptions& opts) {
  if (n < 1) throw std::invalid_argument("run_experiment: n must be >= 1");
  fp.validate();

  ExperimentResult res;
  res.n = n;

  auto provider = [&fp, n](unsigned) {
    auto built = build_pair<Real>(fp, n);
    auto poly = sheffer_poly(built.pair, n);
    std::vector<Complex> c(poly.degree() + 1);
    for (int k = 0; k <= poly.degree(); ++k) c[k] = Complex(poly[k]);
    return c;
  };

  RootOptions ro;
  ro.cert_tol = opts.cert_tol;
  ro.start_bits = opts.precision_bits;
  res.roots = find_roots(provider, ro);

  {
    ScopedPrecision guard(opts.precision_bits);
    res.poly = sheffer_poly(build_pair<Real>(fp, n).pair, n);
    res.line_c = to_real(fp.c());
    res.line_tol = std::max(Real("1e-8"), Real(opts.line_tol_k) / n);
    res.locus = classify(res.roots, res.line_c, res.line_tol);
    for (const auto& z : res.locus.on_line) res.t_values.push_back(z.im / n);

    if (n <= opts.exact_parity_max_n) {
      res.parity_exact = true;
      res.parity_ok = parity_holds_exact(fp, n);
    } else {
      res.parity_exact = false;
      res.parity_ok = parity_holds_numeric(res.poly, fp.c(), opts.precision_bits);
    }
  }
  return res;
}

DensityComparison empirical_vs_limit(const ExperimentResult& result, const FamilyParams& fp,
                                     int bins) {
  if (bins < 10) throw std::invalid_argument("empirical_vs_limit: bins must be >= 10");
  std::vector<Real> positive;
  for (const auto& t : result.t_values)
    if (t > 0) positive.push_back(t);
  if (positive.empty()) throw std::domain_error("empirical_vs_limit: empty on-line set");

  MinPrecision min_prec(256);
  const Real z1 = to_real(fp.z1), z2 = to_real(fp.z2);
  const auto cp = critical_params(z1, z2);

  DensityComparison out;
  out.n = result.n;
  out.l1_distance = Real(0);
  for (int b = 0; b < bins; ++b) {
    DensityBin bin;
    bin.lo = cp.T * b / bins;
    bin.hi = cp.T * (b + 1) / bins;
    int count = 0;
    for (const auto& t : positive)
      if (t >= bin.lo && (t < bin.hi || (b == bins - 1 && t <= bin.hi))) ++count;
    bin.empirical_mass = Real(count) / result.n;
    bin.analytic_mass = density_integral(bin.lo, bin.hi, z1, z2);
    out.l1_distance += abs(bin.empirical_mass - bin.analytic_mass);
    out.bins.push_back(bin);
  }
  return out;
}

FamilyParams example1_left() {
  FamilyParams fp;
  fp.z1 = 1;
  fp.z2 = 7;
  fp.p = 4;
  fp.p_star = 1;
  fp.q = 2;
  fp.q_star = -1;
  fp.alphas = {Rational(2)};
  fp.p_is = {Rational(-1)};
  return fp;
}

FamilyParams example1_right() {
  FamilyParams fp = example1_left();
  fp.p = -4;
  fp.p_star = -1;
  fp.q = -2;
  fp.q_star = 1;
  return fp;
}

}  // namespace sheflab
