#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace maassforge {

using cplx = std::complex<double>;

/// log Gamma on the principal branch (Stirling series with shift and
/// reflection). Throws std::domain_error at the poles.
cplx log_gamma(cplx z);
cplx gamma(cplx z);

/// Upper incomplete gamma Gamma(a, x) for real a (any sign) and x > 0.
double upper_gamma(double a, double x);
/// Exponential integral E1(x) = Gamma(0, x), x > 0.
double expint_e1(double x);

/// e^y K_{it}(y) from K_{it}(y) = int_0^inf e^{-y cosh u} cos(tu) du, by
/// trapezoid sums with step halving. Throws std::domain_error for y <= 0.
double bessel_k_scaled(double t, double y);
/// K_nu(y) for nu = i t.
double bessel_k(double t, double y);

/// Piecewise Chebyshev table for e^x K_{it}(x) on [2^-40, 2^10] with
/// geometric panels [2^p, 2^{p+1}].
class BesselEvaluator {
 public:
  static constexpr int kDegree = 24;
  static constexpr int kMinExp = -40;
  static constexpr int kMaxExp = 10;
  static constexpr int kPanels = kMaxExp - kMinExp;

  explicit BesselEvaluator(double t = 0.0);
  /// Shared instance for a given order (built once).
  static std::shared_ptr<const BesselEvaluator> get(double t);

  double t() const { return t_; }
  double x_min() const;
  double x_max() const;
  /// e^x K_{it}(x); outside the table range the quadrature is used.
  double scaled(double x) const;
  double operator()(double x) const;
  /// Coefficients of panel p, kDegree + 1 values, lowest order first.
  const double* panel(int p) const { return coeffs_.data() + static_cast<std::size_t>(p) * (kDegree + 1); }

 private:
  double t_;
  std::vector<double> coeffs_;
};

/// int_0^inf |K_nu(y)|^2 y^s dy/y in closed form, nu = i t:
/// 2^{s-3} Gamma(s/2 + nu) Gamma(s/2)^2 Gamma(s/2 - nu) / Gamma(s).
cplx mellin_k_moment(double t, cplx s);

/// G_s(z) = int_z^inf K_{it}(w) w^{s-1} dw for real s and z >= 0.
double incomplete_k_mellin(double s, double t, double z);
/// G_s(0) = 2^{s-2} Gamma((s+it)/2) Gamma((s-it)/2); needs s > 0.
double complete_k_mellin(double s, double t);

/// Normalized smoothing weight W_s(x) = G_s(2 pi x)/G_s(0) used by the
/// approximate functional equation. W -> 1 as x -> 0.
struct SmoothingSpec {
  double s = 1.0;
  double t = 0.0;
};
double smoothing_weight(double x, const SmoothingSpec& spec);

/// Neumaier compensated summation.
template <class T>
struct CompensatedSum {
  T sum{};
  T comp{};
  void add(T v);
  T value() const { return sum + comp; }
};

template <>
inline void CompensatedSum<double>::add(double v) {
  const double t = sum + v;
  if (std::abs(sum) >= std::abs(v)) {
    comp += (sum - t) + v;
  } else {
    comp += (v - t) + sum;
  }
  sum = t;
}

template <>
inline void CompensatedSum<cplx>::add(cplx v) {
  CompensatedSum<double> re{sum.real(), comp.real()};
  CompensatedSum<double> im{sum.imag(), comp.imag()};
  re.add(v.real());
  im.add(v.imag());
  sum = {re.sum, im.sum};
  comp = {re.comp, im.comp};
}

}  // namespace maassforge
