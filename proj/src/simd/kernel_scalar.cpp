#include <cmath>

#include "kernel_common.hpp"
#include "maassforge/kernels.hpp"

namespace maassforge {

namespace {

double cheb_scaled(const ThetaKernelArgs& a, double u) {
  int e;
  const double m = std::frexp(u, &e);
  const int p = e - 1 - a.min_exp;
  const double tau = 4.0 * m - 3.0;
  const double* c = a.cheb + static_cast<std::ptrdiff_t>(p) * (a.degree + 1);
  double b1 = 0.0;
  double b2 = 0.0;
  const double tt = 2.0 * tau;
  for (int j = a.degree; j >= 1; --j) {
    const double b0 = tt * b1 - b2 + c[j];
    b2 = b1;
    b1 = b0;
  }
  return tau * b1 - b2 + c[0];
}

}  // namespace

ThetaSums theta_kernel_scalar(const ThetaKernelArgs& a) {
  double s[4] = {0, 0, 0, 0};
  double c[4] = {0, 0, 0, 0};
  const double q_den = static_cast<double>(a.den);
  const double cy = detail::kTwoPi * a.y;
  for (std::int64_t n = a.n_begin; n < a.n_end; ++n) {
    const double re = a.a_re[n];
    const double im = a.a_im[n];
    if (re == 0.0 && im == 0.0) continue;
    const double nd = static_cast<double>(n);
    const double q = static_cast<double>(detail::phase_residue(n, a.num, a.den)) / q_den;
    const double p = nd * a.dx;
    const double err = std::fma(nd, a.dx, -p);
    const double k = std::nearbyint(q + p);
    const double f = ((p - k) + q) + err;
    const double u = cy * nd;
    const double w = cheb_scaled(a, u) * std::exp(-u);
    const double cs = std::cos(detail::kTwoPi * f);
    const double sn = std::sin(detail::kTwoPi * f);
    detail::neumaier(s[0], c[0], re * w * cs);
    detail::neumaier(s[1], c[1], im * w * cs);
    detail::neumaier(s[2], c[2], re * w * sn);
    detail::neumaier(s[3], c[3], im * w * sn);
  }
  return {s[0] + c[0], s[1] + c[1], s[2] + c[2], s[3] + c[3]};
}

}  // namespace maassforge
