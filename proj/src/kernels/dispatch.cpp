#include <cstdlib>
#include <cstring>

#include "swbench/kernels.hpp"

namespace swb::kernels {

#ifdef SWBENCH_HAVE_AVX2
const KernelSet& avx2_set();
#endif

const KernelSet* avx2() {
#ifdef SWBENCH_HAVE_AVX2
  static const bool ok = __builtin_cpu_supports("avx2");
  if (ok) return &avx2_set();
#endif
  return nullptr;
}

const KernelSet& active() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("SWBENCH_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar();
    const KernelSet* v = avx2();
    return v ? v : &scalar();
  }();
  return *chosen;
}

}  // namespace swb::kernels
