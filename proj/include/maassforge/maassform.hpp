#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "maassforge/coefficients.hpp"
#include "maassforge/heckechar.hpp"
#include "maassforge/kernels.hpp"
#include "maassforge/special.hpp"

namespace maassforge {

/// A point x + iy of the upper half plane with x = num/den + dx. Keeping the
/// rational part separate makes the phases n x exact modulo 1 at images of
/// points under Gamma_0(N).
struct EvalPoint {
  i64 num = 0;
  i64 den = 1;
  double dx = 0.0;
  double y = 1.0;

  static EvalPoint from_xy(double x, double y) { return {0, 1, x, y}; }
  double x() const { return static_cast<double>(num) / static_cast<double>(den) + dx; }
};

struct ThetaValue {
  cplx value;
  double tail_bound = 0.0;  // bound on the dropped terms n > n_cut
  i64 n_cut = 0;
};

/// 2x2 integer matrix (a b; c d).
struct Mat2 {
  i64 a = 1, b = 0, c = 0, d = 1;
};

/// Theta series attached to an unramified Hecke character psi of a real
/// quadratic field: sum over n >= 1 of a'(n) sqrt(y) K_nu(2 pi n y) times
/// cos(2 pi n x) (epsilon = 0) or sin(2 pi n x) (epsilon = 1), with
/// a'(n) = sum of psi over ideals of norm n.
class MaassForm {
 public:
  static constexpr double kTruncation = 45.0;  // terms with 2 pi n y > 45 are dropped
  /// Builds a'(1..n_max); see IdealCoefficients::build.
  static MaassForm build(const HeckeCharacter& psi, i64 n_max, int threads = 0);

  const HeckeCharacter& character() const { return *psi_; }
  i64 level() const { return level_; }
  int epsilon() const { return psi_->infinity().epsilon; }
  double nu_im() const { return psi_->infinity().nu_im; }
  /// Laplace eigenvalue 1/4 - nu^2.
  double eigenvalue() const { return 0.25 + nu_im() * nu_im(); }
  i64 n_max() const { return coeffs_->n_max(); }
  /// False for norm-induced characters: the series is then not a cusp form.
  bool cuspidal() const { return cuspidal_; }
  cplx root_number() const { return psi_->root_number(); }
  int exponent() const { return coeffs_->exponent(); }
  const IdealCoefficients& coefficients() const { return *coeffs_; }
  std::shared_ptr<const IdealCoefficients> coefficients_ptr() const { return coeffs_; }

  /// chi_D(d) psi_fin(d); psi_fin is trivial for unramified psi.
  int nebentypus(i64 d) const;
  /// Values of the nebentypus on 0..N-1.
  std::vector<int> nebentypus_table() const;

  /// Multiplicities of psi-values: entry j counts ideals of norm n with
  /// psi = zeta_e^j.
  std::vector<std::uint32_t> coeff_histogram(i64 n) const { return coeffs_->histogram(n); }
  CyclotomicInt coeff_exact(i64 n) const { return coeffs_->exact(n); }
  /// a'(p^k) for a prime p; any k >= 0.
  CyclotomicInt local_coeff(i64 p, int k) const { return coeffs_->local(p, k); }
  /// a'(n) as a complex number.
  cplx coeff(i64 n) const { return coeffs_->value(n); }
  /// Number of ideals of norm n.
  i64 ideal_count(i64 n) const { return coeffs_->ideal_count(n); }
  /// Fourier coefficient a(n), n != 0: a'(|n|)/2 or sgn(n) a'(|n|)/(2i).
  cplx fourier_coeff(i64 n) const;

  /// Smallest n_cut the truncation rule needs at height y.
  static i64 required_n(double y);
  bool evaluable(const EvalPoint& z) const;

  /// Theta_psi(z); conj_coeffs evaluates Theta_{psi-bar} instead. n_cut < 0
  /// uses the truncation rule. Throws InvalidInput if n_max is too small.
  ThetaValue eval(const EvalPoint& z, bool conj_coeffs = false, i64 n_cut = -1) const;
  cplx operator()(double x, double y) const { return eval(EvalPoint::from_xy(x, y)).value; }

 private:
  std::shared_ptr<const HeckeCharacter> psi_;
  i64 level_ = 1;
  bool cuspidal_ = true;
  std::shared_ptr<const IdealCoefficients> coeffs_;
  std::shared_ptr<const BesselEvaluator> bessel_;
  ThetaKernel kernel_ = nullptr;
};

/// Image of z under a matrix of determinant 1 with exact rational part.
EvalPoint act(const Mat2& g, const EvalPoint& z);

struct AutomorphyResult {
  double max_residual = 0.0;
  std::vector<double> residuals;
  int character_value = 1;  // chi(d)
};
/// max |Theta(gz) - chi(d) Theta(z)| over the points. Throws InvalidInput
/// unless det g = 1, N | c, and every z and gz is evaluable.
AutomorphyResult check_automorphy(const MaassForm& form, const Mat2& g, const std::vector<EvalPoint>& points);

struct EigenvalueResult {
  std::array<double, 3> residuals{};  // steps h, h/2, h/4
  std::array<double, 2> ratios{};
  double eigenvalue = 0.0;
};
/// Five-point Laplacian -y^2 (f_xx + f_yy) against (1/4 - nu^2) f.
EigenvalueResult check_eigenvalue(const MaassForm& form, const EvalPoint& z, double h);

/// max over y of |Theta_psi(iy) - s T Theta_psi-bar(i/(N y))| with
/// s = (-1)^epsilon.
double check_functional_equation(const MaassForm& form, const std::vector<double>& ys);
/// Same relation at general points: Theta_psi(z) against
/// s T Theta_psi-bar(-1/(N z)).
double check_functional_equation_at(const MaassForm& form, const std::vector<EvalPoint>& zs);

enum class Cusp { Infinity, Zero };

struct DecayResult {
  bool decays = false;
  std::vector<double> ys;
  std::vector<double> magnitudes;
  /// Worst log2 |f(2y)/f(y)| over consecutive heights; decay faster than
  /// y^{-t} needs every ratio below -t.
  double worst_log2_ratio = 0.0;
  /// Agreement of direct evaluation with the functional-equation route at
  /// the cusp 0 (heights 2 and 4); 0 at infinity.
  double cross_check = 0.0;
};
/// Samples |Theta| along x0 + iy, y in {2, 4, 8, 16}, at the given cusp.
/// At 0 the values Theta(W(x0 + iy)) come from the functional equation.
DecayResult check_cuspidal_decay(const MaassForm& form, Cusp cusp, int t, double x0 = 0.2);

}  // namespace maassforge
