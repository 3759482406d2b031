#pragma once

#include <cstdint>

namespace maassforge {

/// Partial theta sums over n in [n_begin, n_end):
///   sum a'(n) w(n) cos(2 pi n x) and sum a'(n) w(n) sin(2 pi n x),
/// w(n) = K_{it}(2 pi n y), x = num/den + dx. The phase uses the exact
/// residue n*num mod den.
struct ThetaSums {
  double re_cos = 0.0;
  double im_cos = 0.0;
  double re_sin = 0.0;
  double im_sin = 0.0;
};

struct ThetaKernelArgs {
  const double* a_re = nullptr;  // indexed by n
  const double* a_im = nullptr;
  std::int64_t n_begin = 1;
  std::int64_t n_end = 1;
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0
  double dx = 0.0;
  double y = 1.0;
  // Chebyshev table of e^u K(u): panels [2^(min_exp+p), 2^(min_exp+p+1)),
  // `degree + 1` coefficients each. Every 2 pi n y must lie in the table.
  const double* cheb = nullptr;
  int degree = 0;
  int min_exp = 0;
  int panels = 0;
};

using ThetaKernel = ThetaSums (*)(const ThetaKernelArgs&);

ThetaSums theta_kernel_scalar(const ThetaKernelArgs& args);
#if defined(MAASSFORGE_HAVE_AVX2)
ThetaSums theta_kernel_avx2(const ThetaKernelArgs& args);
#endif

/// True when the AVX2 variant was compiled and the CPU supports AVX2 and FMA.
bool avx2_kernel_available();
/// Fastest available kernel; MAASSFORGE_KERNEL=scalar forces the reference.
ThetaKernel select_theta_kernel();
const char* selected_kernel_name();

}  // namespace maassforge
