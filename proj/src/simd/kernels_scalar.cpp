#include "gdet/simd/kernels.hpp"

#include <cmath>

namespace gdet::simd {
namespace {

void eval_grid_scalar(const GridView& c, const ComplexSoA& x, const ComplexSoA& y,
                      ComplexSoA& out) {
  const std::size_t n = x.size();
  out.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x.re[k], xi = x.im[k];
    const double yr = y.re[k], yi = y.im[k];
    double ar = 0.0, ai = 0.0;
    for (std::size_t ii = c.rows; ii-- > 0;) {
      double rr = 0.0, ri = 0.0;
      const double* cr = c.re + ii * c.cols;
      const double* ci = c.im + ii * c.cols;
      for (std::size_t jj = c.cols; jj-- > 0;) {
        const double tr = rr * yr - ri * yi + cr[jj];
        const double ti = rr * yi + ri * yr + ci[jj];
        rr = tr;
        ri = ti;
      }
      const double tr = ar * xr - ai * xi + rr;
      const double ti = ar * xi + ai * xr + ri;
      ar = tr;
      ai = ti;
    }
    out.re[k] = ar;
    out.im[k] = ai;
  }
}

void weighted_dot_scalar(const ComplexSoA& a, const ComplexSoA& b, std::span<const double> w,
                         double& re, double& im) {
  double sr = 0.0, si = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    // a * conj(b)
    const double pr = a.re[k] * b.re[k] + a.im[k] * b.im[k];
    const double pi = a.im[k] * b.re[k] - a.re[k] * b.im[k];
    sr += pr * w[k];
    si += pi * w[k];
  }
  re = sr;
  im = si;
}

// Squared modulus with the same fused rounding the vector path uses, so both
// tables agree bit-for-bit on min/max and their indices.
inline double abs2(double re, double im) { return std::fma(re, re, im * im); }

MinMax modulus_minmax_scalar(const ComplexSoA& a) {
  double lo = abs2(a.re[0], a.im[0]);
  double hi = lo;
  std::size_t ilo = 0, ihi = 0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    const double m = abs2(a.re[k], a.im[k]);
    if (m < lo) { lo = m; ilo = k; }
    if (m > hi) { hi = m; ihi = k; }
  }
  return {std::sqrt(lo), std::sqrt(hi), ilo, ihi};
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &eval_grid_scalar, &weighted_dot_scalar,
                                 &modulus_minmax_scalar};
  return table;
}

}  // namespace gdet::simd
