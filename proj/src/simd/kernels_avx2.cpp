// Compiled with -mavx2 -mfma; only entered after a CPUID check.
#include "gdet/simd/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace gdet::simd {
namespace {

inline void cmul(__m256d ar, __m256d ai, __m256d br, __m256d bi, __m256d& outr,
                 __m256d& outi) {
  outr = _mm256_fmsub_pd(ar, br, _mm256_mul_pd(ai, bi));
  outi = _mm256_fmadd_pd(ar, bi, _mm256_mul_pd(ai, br));
}

void eval_grid_avx2(const GridView& c, const ComplexSoA& x, const ComplexSoA& y,
                    ComplexSoA& out) {
  const std::size_t n = x.size();
  out.resize(n);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d xr = _mm256_loadu_pd(&x.re[k]);
    const __m256d xi = _mm256_loadu_pd(&x.im[k]);
    const __m256d yr = _mm256_loadu_pd(&y.re[k]);
    const __m256d yi = _mm256_loadu_pd(&y.im[k]);
    __m256d ar = _mm256_setzero_pd();
    __m256d ai = _mm256_setzero_pd();
    for (std::size_t ii = c.rows; ii-- > 0;) {
      __m256d rr = _mm256_setzero_pd();
      __m256d ri = _mm256_setzero_pd();
      const double* cr = c.re + ii * c.cols;
      const double* ci = c.im + ii * c.cols;
      for (std::size_t jj = c.cols; jj-- > 0;) {
        __m256d tr, ti;
        cmul(rr, ri, yr, yi, tr, ti);
        rr = _mm256_add_pd(tr, _mm256_set1_pd(cr[jj]));
        ri = _mm256_add_pd(ti, _mm256_set1_pd(ci[jj]));
      }
      __m256d tr, ti;
      cmul(ar, ai, xr, xi, tr, ti);
      ar = _mm256_add_pd(tr, rr);
      ai = _mm256_add_pd(ti, ri);
    }
    _mm256_storeu_pd(&out.re[k], ar);
    _mm256_storeu_pd(&out.im[k], ai);
  }
  if (k < n) {
    ComplexSoA tx(n - k), ty(n - k), to;
    for (std::size_t t = k; t < n; ++t) {
      tx.re[t - k] = x.re[t]; tx.im[t - k] = x.im[t];
      ty.re[t - k] = y.re[t]; ty.im[t - k] = y.im[t];
    }
    scalar_kernels().eval_grid(c, tx, ty, to);
    for (std::size_t t = k; t < n; ++t) {
      out.re[t] = to.re[t - k];
      out.im[t] = to.im[t - k];
    }
  }
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void weighted_dot_avx2(const ComplexSoA& a, const ComplexSoA& b, std::span<const double> w,
                       double& re, double& im) {
  const std::size_t n = a.size();
  __m256d sr = _mm256_setzero_pd();
  __m256d si = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d ar = _mm256_loadu_pd(&a.re[k]);
    const __m256d ai = _mm256_loadu_pd(&a.im[k]);
    const __m256d br = _mm256_loadu_pd(&b.re[k]);
    const __m256d bi = _mm256_loadu_pd(&b.im[k]);
    const __m256d wk = _mm256_loadu_pd(&w[k]);
    const __m256d pr = _mm256_fmadd_pd(ar, br, _mm256_mul_pd(ai, bi));
    const __m256d pi = _mm256_fmsub_pd(ai, br, _mm256_mul_pd(ar, bi));
    sr = _mm256_fmadd_pd(pr, wk, sr);
    si = _mm256_fmadd_pd(pi, wk, si);
  }
  double tr = hsum(sr), ti = hsum(si);
  for (; k < n; ++k) {
    tr += (a.re[k] * b.re[k] + a.im[k] * b.im[k]) * w[k];
    ti += (a.im[k] * b.re[k] - a.re[k] * b.im[k]) * w[k];
  }
  re = tr;
  im = ti;
}

MinMax modulus_minmax_avx2(const ComplexSoA& a) {
  const std::size_t n = a.size();
  if (n < 8) return scalar_kernels().modulus_minmax(a);

  __m256d lo = _mm256_set1_pd(INFINITY);
  __m256d hi = _mm256_set1_pd(-INFINITY);
  __m256d ilo = _mm256_setzero_pd();
  __m256d ihi = _mm256_setzero_pd();
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d four = _mm256_set1_pd(4.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d r = _mm256_loadu_pd(&a.re[k]);
    const __m256d i = _mm256_loadu_pd(&a.im[k]);
    const __m256d m = _mm256_fmadd_pd(r, r, _mm256_mul_pd(i, i));
    const __m256d lt = _mm256_cmp_pd(m, lo, _CMP_LT_OQ);
    const __m256d gt = _mm256_cmp_pd(m, hi, _CMP_GT_OQ);
    lo = _mm256_blendv_pd(lo, m, lt);
    ilo = _mm256_blendv_pd(ilo, idx, lt);
    hi = _mm256_blendv_pd(hi, m, gt);
    ihi = _mm256_blendv_pd(ihi, idx, gt);
    idx = _mm256_add_pd(idx, four);
  }
  alignas(32) double l[4], li[4], h[4], hidx[4];
  _mm256_store_pd(l, lo);
  _mm256_store_pd(li, ilo);
  _mm256_store_pd(h, hi);
  _mm256_store_pd(hidx, ihi);
  double blo = l[0], bhi = h[0];
  std::size_t bilo = static_cast<std::size_t>(li[0]), bihi = static_cast<std::size_t>(hidx[0]);
  for (int lane = 1; lane < 4; ++lane) {
    const auto il = static_cast<std::size_t>(li[lane]);
    const auto ih = static_cast<std::size_t>(hidx[lane]);
    if (l[lane] < blo || (l[lane] == blo && il < bilo)) { blo = l[lane]; bilo = il; }
    if (h[lane] > bhi || (h[lane] == bhi && ih < bihi)) { bhi = h[lane]; bihi = ih; }
  }
  for (; k < n; ++k) {
    const double m = std::fma(a.re[k], a.re[k], a.im[k] * a.im[k]);
    if (m < blo) { blo = m; bilo = k; }
    if (m > bhi) { bhi = m; bihi = k; }
  }
  return {std::sqrt(blo), std::sqrt(bhi), bilo, bihi};
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{"avx2", &eval_grid_avx2, &weighted_dot_avx2,
                                 &modulus_minmax_avx2};
  return table;
}

}  // namespace gdet::simd
