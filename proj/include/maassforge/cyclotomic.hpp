#pragma once

#include <complex>
#include <vector>

#include "maassforge/arith.hpp"

namespace maassforge {

/// Element of Z[zeta_e] stored as sum_j c_j zeta_e^j, 0 <= j < e. The
/// representation is not unique; equality reduces modulo the cyclotomic
/// polynomial Phi_e.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int e = 1);
  static CyclotomicInt root(int k, int e);
  static CyclotomicInt integer(i64 v, int e);

  int order() const { return static_cast<int>(c_.size()); }
  i64 coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }
  const std::vector<i64>& coeffs() const { return c_; }

  void add_root(int k, i64 mult = 1);
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator*(i64 s) const;
  /// Complex conjugate (zeta -> zeta^{-1}).
  CyclotomicInt conj() const;

  /// Coefficients of the canonical representative of degree < phi(e).
  std::vector<i64> reduced() const;
  bool is_zero() const;
  bool operator==(const CyclotomicInt& o) const;

  std::complex<double> to_complex() const;

 private:
  std::vector<i64> c_;
};

/// Integer coefficients of Phi_m, lowest degree first (cached).
const std::vector<i64>& cyclotomic_polynomial(int m);

/// exp(2 pi i k / e) with the argument reduced exactly first.
std::complex<double> root_of_unity(i64 k, i64 e);

}  // namespace maassforge
