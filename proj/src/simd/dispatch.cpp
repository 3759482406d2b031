#include <cstdlib>
#include <cstring>

#include "maassforge/kernels.hpp"

namespace maassforge {

bool avx2_kernel_available() {
#if defined(MAASSFORGE_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

bool force_scalar() {
  const char* env = std::getenv("MAASSFORGE_KERNEL");
  return env != nullptr && std::strcmp(env, "scalar") == 0;
}

}  // namespace

ThetaKernel select_theta_kernel() {
#if defined(MAASSFORGE_HAVE_AVX2)
  if (!force_scalar() && avx2_kernel_available()) return &theta_kernel_avx2;
#endif
  return &theta_kernel_scalar;
}

const char* selected_kernel_name() { return select_theta_kernel() == &theta_kernel_scalar ? "scalar" : "avx2"; }

}  // namespace maassforge
