#include <cstdlib>
#include <string_view>

#include "doctest.h"
#include "gdet/simd/kernels.hpp"
#include "support.hpp"

using namespace gdet;
using namespace testing;

namespace {

simd::ComplexSoA random_soa(std::mt19937_64& rng, std::size_t n, double radius) {
  simd::ComplexSoA a(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx c = in_disk(rng, radius);
    a.re[k] = c.real();
    a.im[k] = c.imag();
  }
  return a;
}

const simd::KernelTable& vector_table() {
  return simd::avx2_available() ? simd::avx2_kernels() : simd::scalar_kernels();
}

}  // namespace

TEST_CASE("active table honours the scalar override") {
  const char* force = std::getenv("GDET_FORCE_SCALAR");
  if (force != nullptr && std::string_view(force) == "1") {
    CHECK(simd::active().name == "scalar");
  } else {
    CHECK(simd::active().name == vector_table().name);
  }
}

TEST_CASE("grid evaluation matches the scalar reference") {
  std::mt19937_64 rng(71);
  const auto& ref = simd::scalar_kernels();
  const auto& vec = vector_table();
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 64u, 257u}) {
    for (Bidegree b : {Bidegree{0, 0}, Bidegree{1, 3}, Bidegree{6, 2}, Bidegree{9, 9}}) {
      const BiPoly p = random_dense(rng, Space::ZW, b);
      const simd::ComplexSoA x = random_soa(rng, n, 1.2), y = random_soa(rng, n, 1.2);
      simd::ComplexSoA out_ref, out_vec;
      p.eval_batch(ref, x, y, out_ref);
      p.eval_batch(vec, x, y, out_vec);
      REQUIRE(out_vec.size() == n);
      for (std::size_t k = 0; k < n; ++k) {
        const double scale = 1.0 + std::hypot(out_ref.re[k], out_ref.im[k]);
        CHECK(std::abs(out_ref.re[k] - out_vec.re[k]) <= 1e-13 * scale * (1 + b.d1 + b.d2));
        CHECK(std::abs(out_ref.im[k] - out_vec.im[k]) <= 1e-13 * scale * (1 + b.d1 + b.d2));
      }
    }
  }
}

TEST_CASE("weighted dot matches the scalar reference") {
  std::mt19937_64 rng(72);
  for (std::size_t n : {0u, 1u, 2u, 4u, 7u, 16u, 1023u}) {
    const simd::ComplexSoA a = random_soa(rng, n, 1.0), b = random_soa(rng, n, 1.0);
    std::vector<double> w(n);
    for (double& x : w) x = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    double r1 = 0, i1 = 0, r2 = 0, i2 = 0;
    simd::scalar_kernels().weighted_dot(a, b, w, r1, i1);
    vector_table().weighted_dot(a, b, w, r2, i2);
    // Oracle: plain complex accumulation.
    cplx direct = 0.0;
    for (std::size_t k = 0; k < n; ++k) direct += cplx(a.re[k], a.im[k]) * std::conj(cplx(b.re[k], b.im[k])) * w[k];
    const double tol = 1e-14 * (1.0 + double(n));
    CHECK(std::abs(r1 - direct.real()) <= tol);
    CHECK(std::abs(i1 - direct.imag()) <= tol);
    CHECK(std::abs(r2 - r1) <= tol);
    CHECK(std::abs(i2 - i1) <= tol);
  }
}

TEST_CASE("modulus extrema are bit-identical across kernels") {
  std::mt19937_64 rng(73);
  for (std::size_t n : {1u, 2u, 7u, 8u, 9u, 31u, 100u, 4096u}) {
    simd::ComplexSoA a = random_soa(rng, n, 3.0);
    if (n > 4) {
      // Ties: the first occurrence must win.
      a.re[n - 1] = a.re[1];
      a.im[n - 1] = a.im[1];
    }
    const simd::MinMax s = simd::scalar_kernels().modulus_minmax(a);
    const simd::MinMax v = vector_table().modulus_minmax(a);
    CHECK(s.min_abs == v.min_abs);
    CHECK(s.max_abs == v.max_abs);
    CHECK(s.argmin == v.argmin);
    CHECK(s.argmax == v.argmax);
    double lo = INFINITY, hi = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double m = std::hypot(a.re[k], a.im[k]);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    CHECK(s.min_abs == doctest::Approx(lo).epsilon(1e-15));
    CHECK(s.max_abs == doctest::Approx(hi).epsilon(1e-15));
  }
}
