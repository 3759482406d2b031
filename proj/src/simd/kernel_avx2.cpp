// AVX2/FMA variant of the theta kernel. Compiled with -mavx2 -mfma and only
// entered after a runtime CPU check.

#include <immintrin.h>

#include "kernel_common.hpp"
#include "maassforge/kernels.hpp"

namespace maassforge {

namespace {

// e^x for x in [-708, 0] by Cody-Waite reduction and a degree-13 Taylor
// polynomial on |r| <= ln2/2.
inline __m256d exp_neg(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);
  static constexpr double inv_fact[14] = {1.0,
                                          1.0,
                                          1.0 / 2,
                                          1.0 / 6,
                                          1.0 / 24,
                                          1.0 / 120,
                                          1.0 / 720,
                                          1.0 / 5040,
                                          1.0 / 40320,
                                          1.0 / 362880,
                                          1.0 / 3628800,
                                          1.0 / 39916800,
                                          1.0 / 479001600,
                                          1.0 / 6227020800.0};
  __m256d p = _mm256_set1_pd(inv_fact[13]);
  for (int j = 12; j >= 0; --j) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_fact[j]));
  const __m128i ki = _mm256_cvtpd_epi32(k);
  __m256i bits = _mm256_cvtepi32_epi64(ki);
  bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
  bits = _mm256_slli_epi64(bits, 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

// cos and sin of 2 pi f for f in [-1/2, 1/2].
inline void sincos_turn(__m256d f, __m256d& c_out, __m256d& s_out) {
  const __m256d q = _mm256_round_pd(_mm256_mul_pd(f, _mm256_set1_pd(4.0)), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d g = _mm256_fnmadd_pd(q, _mm256_set1_pd(0.25), f);
  const __m256d r = _mm256_mul_pd(g, _mm256_set1_pd(detail::kTwoPi));
  const __m256d r2 = _mm256_mul_pd(r, r);
  // sin r = r (1 - r^2/3! + ...), cos r = 1 - r^2/2! + ...
  static constexpr double sc[9] = {-1.0 / 6,
                                   1.0 / 120,
                                   -1.0 / 5040,
                                   1.0 / 362880,
                                   -1.0 / 39916800,
                                   1.0 / 6227020800.0,
                                   -1.0 / 1307674368000.0,
                                   1.0 / 355687428096000.0,
                                   -1.0 / 121645100408832000.0};
  static constexpr double cc[9] = {-1.0 / 2,
                                   1.0 / 24,
                                   -1.0 / 720,
                                   1.0 / 40320,
                                   -1.0 / 3628800,
                                   1.0 / 479001600,
                                   -1.0 / 87178291200.0,
                                   1.0 / 20922789888000.0,
                                   -1.0 / 6402373705728000.0};
  __m256d ps = _mm256_set1_pd(sc[8]);
  __m256d pc = _mm256_set1_pd(cc[8]);
  for (int j = 7; j >= 0; --j) {
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(sc[j]));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(cc[j]));
  }
  const __m256d sr = _mm256_fmadd_pd(_mm256_mul_pd(ps, r2), r, r);
  const __m256d cr = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(1.0));
  // Quadrant q mod 4: rotate (cr, sr) by q quarter turns.
  const __m256i qi = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(q));
  const __m256i qm = _mm256_and_si256(qi, _mm256_set1_epi64x(3));
  const __m256d odd = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(qm, _mm256_set1_epi64x(1)), _mm256_set1_epi64x(1)));
  const __m256d cneg = _mm256_castsi256_pd(_mm256_or_si256(_mm256_cmpeq_epi64(qm, _mm256_set1_epi64x(1)),
                                                           _mm256_cmpeq_epi64(qm, _mm256_set1_epi64x(2))));
  const __m256d sneg = _mm256_castsi256_pd(_mm256_or_si256(_mm256_cmpeq_epi64(qm, _mm256_set1_epi64x(2)),
                                                           _mm256_cmpeq_epi64(qm, _mm256_set1_epi64x(3))));
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d c = _mm256_blendv_pd(cr, sr, odd);
  __m256d s = _mm256_blendv_pd(sr, cr, odd);
  c = _mm256_xor_pd(c, _mm256_and_pd(cneg, sign));
  s = _mm256_xor_pd(s, _mm256_and_pd(sneg, sign));
  c_out = c;
  s_out = s;
}

inline __m256d cheb_scaled(const ThetaKernelArgs& a, __m256d u) {
  const __m256i bits = _mm256_castpd_si256(u);
  const __m256i ebiased = _mm256_srli_epi64(bits, 52);
  const __m256i p = _mm256_sub_epi64(ebiased, _mm256_set1_epi64x(1023 + a.min_exp));
  const __m256i base = _mm256_mul_epu32(p, _mm256_set1_epi64x(a.degree + 1));
  const __m256i mant = _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                                       _mm256_set1_epi64x(0x3FF0000000000000LL));
  const __m256d tau = _mm256_sub_pd(_mm256_add_pd(_mm256_castsi256_pd(mant), _mm256_castsi256_pd(mant)), _mm256_set1_pd(3.0));
  const __m256d tt = _mm256_add_pd(tau, tau);
  __m256d b1 = _mm256_setzero_pd();
  __m256d b2 = _mm256_setzero_pd();
  for (int j = a.degree; j >= 1; --j) {
    const __m256i idx = _mm256_add_epi64(base, _mm256_set1_epi64x(j));
    const __m256d cj = _mm256_i64gather_pd(a.cheb, idx, 8);
    const __m256d b0 = _mm256_add_pd(_mm256_fmsub_pd(tt, b1, b2), cj);
    b2 = b1;
    b1 = b0;
  }
  const __m256d c0 = _mm256_i64gather_pd(a.cheb, base, 8);
  return _mm256_add_pd(_mm256_fmsub_pd(tau, b1, b2), c0);
}

inline void neumaier4(__m256d& sum, __m256d& comp, __m256d v) {
  const __m256d t = _mm256_add_pd(sum, v);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
  const __m256d big = _mm256_cmp_pd(_mm256_and_pd(sum, abs_mask), _mm256_and_pd(v, abs_mask), _CMP_GE_OQ);
  const __m256d e1 = _mm256_add_pd(_mm256_sub_pd(sum, t), v);
  const __m256d e2 = _mm256_add_pd(_mm256_sub_pd(v, t), sum);
  comp = _mm256_add_pd(comp, _mm256_blendv_pd(e2, e1, big));
  sum = t;
}

inline void store_sum(double& sum, double& comp, __m256d s, __m256d c) {
  alignas(32) double ls[4];
  alignas(32) double lc[4];
  _mm256_store_pd(ls, s);
  _mm256_store_pd(lc, c);
  for (int i = 0; i < 4; ++i) {
    detail::neumaier(sum, comp, ls[i]);
    detail::neumaier(sum, comp, lc[i]);
  }
}

}  // namespace

ThetaSums theta_kernel_avx2(const ThetaKernelArgs& a) {
  const std::int64_t count = a.n_end > a.n_begin ? a.n_end - a.n_begin : 0;
  const std::int64_t vec_end = a.n_begin + (count / 4) * 4;
  std::int64_t nm = a.num % a.den;
  if (nm < 0) nm += a.den;
  std::int64_t r = detail::phase_residue(a.n_begin, a.num, a.den);

  const __m256d den = _mm256_set1_pd(static_cast<double>(a.den));
  const __m256d dx = _mm256_set1_pd(a.dx);
  const __m256d cy = _mm256_set1_pd(detail::kTwoPi * a.y);
  __m256d s0 = _mm256_setzero_pd(), c0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd(), c1 = _mm256_setzero_pd();
  __m256d s2 = _mm256_setzero_pd(), c2 = _mm256_setzero_pd();
  __m256d s3 = _mm256_setzero_pd(), c3 = _mm256_setzero_pd();

  for (std::int64_t n = a.n_begin; n < vec_end; n += 4) {
    const __m256d re = _mm256_loadu_pd(a.a_re + n);
    const __m256d im = _mm256_loadu_pd(a.a_im + n);
    alignas(32) double rq[4];
    for (int i = 0; i < 4; ++i) {
      rq[i] = static_cast<double>(r);
      r += nm;
      if (r >= a.den) r -= a.den;
    }
    const __m256d bothzero =
        _mm256_and_pd(_mm256_cmp_pd(re, _mm256_setzero_pd(), _CMP_EQ_OQ), _mm256_cmp_pd(im, _mm256_setzero_pd(), _CMP_EQ_OQ));
    if (_mm256_movemask_pd(bothzero) == 0xF) continue;
    const __m256d nd = _mm256_set_pd(static_cast<double>(n + 3), static_cast<double>(n + 2), static_cast<double>(n + 1),
                                     static_cast<double>(n));
    const __m256d q = _mm256_div_pd(_mm256_load_pd(rq), den);
    const __m256d p = _mm256_mul_pd(nd, dx);
    const __m256d err = _mm256_fmsub_pd(nd, dx, p);
    const __m256d k = _mm256_round_pd(_mm256_add_pd(q, p), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    const __m256d f = _mm256_add_pd(_mm256_add_pd(_mm256_sub_pd(p, k), q), err);
    const __m256d u = _mm256_mul_pd(cy, nd);
    const __m256d w = _mm256_mul_pd(cheb_scaled(a, u), exp_neg(_mm256_sub_pd(_mm256_setzero_pd(), u)));
    __m256d cs, sn;
    sincos_turn(f, cs, sn);
    const __m256d wc = _mm256_mul_pd(w, cs);
    const __m256d ws = _mm256_mul_pd(w, sn);
    neumaier4(s0, c0, _mm256_mul_pd(re, wc));
    neumaier4(s1, c1, _mm256_mul_pd(im, wc));
    neumaier4(s2, c2, _mm256_mul_pd(re, ws));
    neumaier4(s3, c3, _mm256_mul_pd(im, ws));
  }

  double sum[4] = {0, 0, 0, 0};
  double comp[4] = {0, 0, 0, 0};
  store_sum(sum[0], comp[0], s0, c0);
  store_sum(sum[1], comp[1], s1, c1);
  store_sum(sum[2], comp[2], s2, c2);
  store_sum(sum[3], comp[3], s3, c3);
  if (vec_end < a.n_end) {
    ThetaKernelArgs tail = a;
    tail.n_begin = vec_end;
    const ThetaSums t = theta_kernel_scalar(tail);
    detail::neumaier(sum[0], comp[0], t.re_cos);
    detail::neumaier(sum[1], comp[1], t.im_cos);
    detail::neumaier(sum[2], comp[2], t.re_sin);
    detail::neumaier(sum[3], comp[3], t.im_sin);
  }
  return {sum[0] + comp[0], sum[1] + comp[1], sum[2] + comp[2], sum[3] + comp[3]};
}

}  // namespace maassforge
