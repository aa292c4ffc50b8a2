#include <cstdlib>
#include <string_view>

#include "gdet/simd/kernels.hpp"

namespace gdet::simd {

bool avx2_available() {
#if defined(GDET_HAVE_AVX2)
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return ok;
#else
  return false;
#endif
}

#if !defined(GDET_HAVE_AVX2)
const KernelTable& avx2_kernels() { return scalar_kernels(); }
#endif

const KernelTable& active() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* force = std::getenv("GDET_FORCE_SCALAR");
    if (force != nullptr && std::string_view(force) == "1") return scalar_kernels();
    return avx2_available() ? avx2_kernels() : scalar_kernels();
  }();
  return table;
}

}  // namespace gdet::simd
