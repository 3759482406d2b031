#pragma once

// Helpers shared by the kernel variants. Kept free of library inline code so
// the AVX2 translation unit does not emit ISA-specific copies of it.

#include <cstdint>

namespace maassforge::detail {
namespace {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// n*num mod den in [0, den), without overflow for den < 2^31.
inline std::int64_t phase_residue(std::int64_t n, std::int64_t num, std::int64_t den) {
  std::int64_t nm = num % den;
  if (nm < 0) nm += den;
  return ((n % den) * nm) % den;
}

/// Neumaier step on one accumulator pair.
inline void neumaier(double& sum, double& comp, double v) {
  const double t = sum + v;
  const double as = sum < 0 ? -sum : sum;
  const double av = v < 0 ? -v : v;
  if (as >= av) {
    comp += (sum - t) + v;
  } else {
    comp += (v - t) + sum;
  }
  sum = t;
}

}  // namespace
}  // namespace maassforge::detail
