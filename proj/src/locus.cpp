#include "sheflab/locus.hpp"

#include <algorithm>

namespace sheflab {

Real default_locus_tol(const RootSet& r) {
  Real m(0);
  for (const auto& z : r.roots) m = std::max(m, abs(z));
  return Real("1e-12") * (1 + m);
}

LocusReport classify(const RootSet& r, const Real& c, const Real& tol) {
  if (!(tol > 0)) throw std::invalid_argument("classify: tol must be positive");
  LocusReport rep;
  rep.line_c = c;
  rep.tol = tol;
  for (const auto& z : r.roots) {
    const bool near_line = abs(z.re - c) <= tol;
    const bool near_axis = abs(z.im) <= tol;
    if (near_line) {
      rep.on_line.push_back(z);
      if (near_axis) rep.flagged_center.push_back(z);
    } else if (near_axis) {
      rep.real_axis.push_back(z);
    } else {
      rep.other.push_back(z);
    }
  }
  return rep;
}

namespace {
bool lex_less(const Complex& a, const Complex& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}
}  // namespace

SymmetryResult check_line_symmetry(const RootSet& r, const Real& m, const Real& tol) {
  std::vector<Complex> src = r.roots;
  std::vector<Complex> dst = r.roots;
  for (auto& z : dst) z = Complex(-m) - z;
  std::sort(src.begin(), src.end(), lex_less);
  std::sort(dst.begin(), dst.end(), lex_less);

  std::vector<bool> used(dst.size(), false);
  SymmetryResult res;
  res.max_mismatch = Real(0);
  for (const auto& s : src) {
    int pick = -1;
    Real best(0);
    for (size_t j = 0; j < dst.size(); ++j) {
      if (used[j]) continue;
      Real d = abs(s - dst[j]);
      if (pick < 0 || d < best) { pick = static_cast<int>(j); best = d; }
    }
    used[pick] = true;
    res.max_mismatch = std::max(res.max_mismatch, best);
  }
  res.symmetric = res.max_mismatch <= tol;
  return res;
}

HalfplaneTestResult upper_halfplane_sum_test(const std::vector<Complex>& g_coeffs,
                                             const RootOptions& opts) {
  HalfplaneTestResult out;
  auto g_roots = find_roots(g_coeffs, opts);
  out.precondition_ok = g_roots.converged;
  for (const auto& z : g_roots.roots)
    if (!(z.im > 0)) out.precondition_ok = false;
  if (!out.precondition_ok) return out;

  std::vector<Complex> sum(g_coeffs.size());
  for (size_t k = 0; k < g_coeffs.size(); ++k)
    sum[k] = Complex(2 * g_coeffs[k].re);  // G + Gbar
  auto roots = find_roots(sum, opts);
  Real tol = default_locus_tol(roots);
  out.all_real = true;
  for (const auto& z : roots.roots)
    if (abs(z.im) > tol) out.all_real = false;
  return out;
}

}  // namespace sheflab
