#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "maassforge/coefficients.hpp"
#include "maassforge/maassform.hpp"

namespace maassforge {

/// Dirichlet series sum b(n) n^-s with degree-2 gamma data over Q:
/// Lambda(s) = (Q/pi)^s Gamma((s+eps+nu)/2) Gamma((s+eps-nu)/2) L(s),
/// Q^2 = conductor, and Lambda(s) = T Lambda-bar(1-s).
struct LSeries {
  std::vector<cplx> b;  // b[0] unused
  i64 conductor = 1;
  InfinityType gamma;
  cplx root_number = 1.0;
  bool primitive = true;
  std::shared_ptr<const IdealCoefficients> exact;  // set for Hecke L-series

  i64 n_max() const { return static_cast<i64>(b.size()) - 1; }
  cplx coeff(i64 n) const;
  /// sum over n <= X of b(n) n^-s, compensated.
  cplx partial_sum(double s, i64 X) const;
};

/// b(n) = sum of psi over ideals of norm n; conductor D N(f).
LSeries hecke_l_coeffs(const HeckeCharacter& psi, i64 n_max, int threads = 0);
/// b(n) = |a'(n)|^2. No functional-equation data.
LSeries rankin_coeffs(const MaassForm& form, i64 n_max);

/// Local factor (1 - alpha p^-s)^-1 (1 - beta p^-s)^-1 of L(s, psi).
struct SatakeData {
  i64 p = 0;
  SplitKind kind = SplitKind::Inert;
  cplx alpha;
  cplx beta;
  CyclotomicInt trace;  // alpha + beta
  CyclotomicInt det;    // alpha beta
};
SatakeData satake(const HeckeCharacter& psi, i64 p);

struct RankinResidual {
  double residual = 0.0;
  cplx dirichlet;  // sum_{n <= X} |a'(n)|^2 n^-s
  cplx euler;      // product over p <= X of the factored local terms
};
/// Compares the Rankin series with its factorization through zeta_F,
/// zeta(2s) and L(s, psi (psi-bar o sigma)), both truncated at X. Needs
/// form.n_max() >= X and s >= 1.5.
RankinResidual rankin_euler_identity_residual(const MaassForm& form, double s, i64 X);

struct LValue {
  cplx value;
  double error_bound = 0.0;
  i64 terms = 0;
};
/// L(s) for real s from the smoothed approximate functional equation split
/// at A. Throws InvalidInput if the series is too short.
LValue l_value_afe(const LSeries& L, double s, double A = 1.0);
/// Coefficients needed by l_value_afe at cutoff A.
i64 afe_terms_needed(const LSeries& L, double A);
/// L(1) as 4 int_0^inf sum b(n) K_nu(2 pi n u) du. Uses no functional
/// equation data; needs a character whose series has no pole at 1.
LValue l_value_mellin(const LSeries& L);

/// L(1, psi') for psi' = psi (psi-bar o sigma) in scope: value at A = 1,
/// error bound from the disagreement with A = 2 plus the truncation bounds.
/// Throws InvalidInput for the trivial character (pole at s = 1).
LValue l_value_at_1(const HeckeCharacter& psi_pair, int threads = 0);

}  // namespace maassforge
