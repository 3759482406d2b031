#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "maassforge/heckechar.hpp"

namespace maassforge {

/// b(n) = sum of psi over the ideals of norm n, for 1 <= n <= n_max, kept
/// exactly as multiplicities of each root of unity zeta_e^j.
class IdealCoefficients {
 public:
  static constexpr i64 kMaxTableEntries = 1'000'000'000;

  /// Multiplicative sieve over prime powers; threads = 0 picks the default
  /// worker count. The result does not depend on the thread count. Throws
  /// ResourceLimit past kMaxTableEntries.
  static std::shared_ptr<const IdealCoefficients> build(const HeckeCharacter& psi, i64 n_max, int threads = 0);

  i64 n_max() const { return n_max_; }
  int exponent() const { return e_; }

  /// Entry j counts ideals of norm n with psi = zeta_e^j.
  std::vector<std::uint32_t> histogram(i64 n) const;
  CyclotomicInt exact(i64 n) const;
  std::complex<double> value(i64 n) const;
  /// Number of ideals of norm n.
  i64 ideal_count(i64 n) const;
  /// a'(p^k) for a prime p from the splitting of p; any k >= 0.
  CyclotomicInt local(i64 p, int k) const;

  /// Realized values, indexed by n (entry 0 is zero).
  const std::vector<double>& re() const { return re_; }
  const std::vector<double>& im() const { return im_; }

 private:
  std::shared_ptr<const HeckeCharacter> psi_;
  i64 n_max_ = 0;
  int e_ = 1;
  std::vector<std::uint32_t> hist_;  // (n_max + 1) * e
  std::vector<double> re_;
  std::vector<double> im_;
};

}  // namespace maassforge
