#pragma once
// Data-parallel inner loops shared by the grid scans and torus quadratures.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The variant is picked once at runtime from CPUID; setting
// GDET_FORCE_SCALAR=1 in the environment pins the scalar path.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace gdet::simd {

/// Structure-of-arrays complex vector. re.size() == im.size().
struct ComplexSoA {
  std::vector<double> re;
  std::vector<double> im;

  ComplexSoA() = default;
  explicit ComplexSoA(std::size_t n) : re(n, 0.0), im(n, 0.0) {}
  std::size_t size() const { return re.size(); }
  void resize(std::size_t n) { re.resize(n, 0.0); im.resize(n, 0.0); }
};

/// Read-only view of a dense coefficient grid, row-major, (rows x cols).
struct GridView {
  const double* re;
  const double* im;
  std::size_t rows;
  std::size_t cols;
};

struct MinMax {
  double min_abs;
  double max_abs;
  std::size_t argmin;
  std::size_t argmax;
};

/// out[k] = sum_{i,j} c[i][j] x_k^i y_k^j  (nested Horner, x outer).
using EvalGridFn = void (*)(const GridView& c, const ComplexSoA& x, const ComplexSoA& y,
                            ComplexSoA& out);
/// sum_k a_k conj(b_k) w_k.
using WeightedDotFn = void (*)(const ComplexSoA& a, const ComplexSoA& b,
                               std::span<const double> w, double& re, double& im);
/// min/max of |a_k| with first-index tie breaking. a must be nonempty.
using ModulusMinMaxFn = MinMax (*)(const ComplexSoA& a);

struct KernelTable {
  std::string_view name;
  EvalGridFn eval_grid;
  WeightedDotFn weighted_dot;
  ModulusMinMaxFn modulus_minmax;
};

const KernelTable& scalar_kernels();

/// True when the AVX2 table is compiled in and the CPU supports AVX2 and FMA.
bool avx2_available();
/// The AVX2 table; only valid when avx2_available().
const KernelTable& avx2_kernels();

/// Table chosen at first call.
const KernelTable& active();

}  // namespace gdet::simd
