#include "maassforge/maassform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>


namespace maassforge {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace

MaassForm MaassForm::build(const HeckeCharacter& psi, i64 n_max, int threads) {
  MaassForm f;
  f.psi_ = std::make_shared<const HeckeCharacter>(psi);
  f.level_ = psi.field().D * psi.conductor_norm();
  f.cuspidal_ = !psi.is_norm_induced();
  f.coeffs_ = IdealCoefficients::build(psi, n_max, threads);
  f.bessel_ = BesselEvaluator::get(f.nu_im());
  f.kernel_ = select_theta_kernel();
  return f;
}

int MaassForm::nebentypus(i64 d) const { return kronecker_chi_D(psi_->field(), d); }

std::vector<int> MaassForm::nebentypus_table() const {
  std::vector<int> t(static_cast<std::size_t>(level_));
  for (i64 d = 0; d < level_; ++d) t[static_cast<std::size_t>(d)] = nebentypus(d);
  return t;
}

cplx MaassForm::fourier_coeff(i64 n) const {
  if (n == 0) throw InvalidInput("fourier_coeff: n must be nonzero");
  const cplx a = coeff(n < 0 ? -n : n);
  if (epsilon() == 0) return a / 2.0;
  const double sgn = n < 0 ? -1.0 : 1.0;
  return sgn * a / cplx(0.0, 2.0);
}

i64 MaassForm::required_n(double y) {
  if (!(y > 0.0)) throw InvalidInput("evaluation height must be positive");
  const double n = std::floor(kTruncation / (2.0 * kPi * y));
  if (n > 9.0e15) return std::numeric_limits<i64>::max();
  return static_cast<i64>(n);
}

bool MaassForm::evaluable(const EvalPoint& z) const { return z.y > 0.0 && required_n(z.y) <= n_max(); }

ThetaValue MaassForm::eval(const EvalPoint& z, bool conj_coeffs, i64 n_cut) const {
  if (!(z.y > 0.0)) throw InvalidInput("eval_theta: y must be positive");
  if (z.den <= 0) throw InvalidInput("eval_theta: denominator must be positive");
  if (n_cut < 0) n_cut = required_n(z.y);
  if (n_cut > n_max()) throw InvalidInput("eval_theta: n_max too small for this height");
  const double c = 2.0 * kPi * z.y;
  if (n_cut >= 1 && !(c >= bessel_->x_min() && c * static_cast<double>(n_cut) < bessel_->x_max())) {
    throw InvalidInput("eval_theta: height outside the Bessel table");
  }

  ThetaKernelArgs args;
  args.a_re = coeffs_->re().data();
  args.a_im = coeffs_->im().data();
  args.n_begin = 1;
  args.n_end = n_cut + 1;
  args.num = z.num;
  args.den = z.den;
  args.dx = z.dx;
  args.y = z.y;
  args.cheb = bessel_->panel(0);
  args.degree = BesselEvaluator::kDegree;
  args.min_exp = BesselEvaluator::kMinExp;
  args.panels = BesselEvaluator::kPanels;
  const ThetaSums s = n_cut >= 1 ? kernel_(args) : ThetaSums{};

  const double sy = std::sqrt(z.y);
  const double im_sign = conj_coeffs ? -1.0 : 1.0;
  ThetaValue out;
  out.n_cut = n_cut;
  out.value = epsilon() == 0 ? cplx(s.re_cos, im_sign * s.im_cos) * sy : cplx(s.re_sin, im_sign * s.im_sin) * sy;

  // |a'(n)| <= d(n) <= 2 sqrt(n) and |K_it(u)| <= K_0(u) <= max(1, sqrt(pi/2u)) e^-u.
  const double N = static_cast<double>(n_cut);
  const double kfac = std::max(1.0, std::sqrt(kPi / (2.0 * c * (N + 1.0))));
  double integral;
  if (N >= 1.0 / (2.0 * c)) {
    integral = std::exp(-c * N) * (std::sqrt(N) / c + 1.0 / (2.0 * c * c * std::sqrt(N)));
  } else {
    integral = std::sqrt(1.0 / (2.0 * c)) * std::exp(-0.5) + std::sqrt(kPi) / (2.0 * std::pow(c, 1.5));
  }
  out.tail_bound = sy * 2.0 * kfac * integral;
  return out;
}

EvalPoint act(const Mat2& g, const EvalPoint& z) {
  if (g.a * g.d - g.b * g.c != 1) throw InvalidInput("act: determinant must be 1");
  EvalPoint w;
  if (g.c == 0) {
    // a = d = +-1: z -> z + b d.
    w = z;
    w.num = z.num + g.b * g.d * z.den;
    return w;
  }
  // gz = a/c - 1/(c (cz + d)).
  const i64 R = g.c * z.num + g.d * z.den;
  const double re = static_cast<double>(R) / static_cast<double>(z.den) + static_cast<double>(g.c) * z.dx;
  const double im = static_cast<double>(g.c) * z.y;
  const double n2 = re * re + im * im;
  const double cc = static_cast<double>(g.c);
  w.num = g.c > 0 ? g.a : -g.a;
  w.den = g.c > 0 ? g.c : -g.c;
  w.dx = -re / (cc * n2);
  w.y = z.y / n2;
  return w;
}

AutomorphyResult check_automorphy(const MaassForm& form, const Mat2& g, const std::vector<EvalPoint>& points) {
  if (g.a * g.d - g.b * g.c != 1) throw InvalidInput("check_automorphy: determinant must be 1");
  if (g.c % form.level() != 0) throw InvalidInput("check_automorphy: matrix not in Gamma_0(N)");
  AutomorphyResult r;
  r.character_value = form.nebentypus(g.d);
  std::vector<EvalPoint> images;
  for (const auto& z : points) {
    const EvalPoint w = act(g, z);
    if (!form.evaluable(z) || !form.evaluable(w)) throw InvalidInput("check_automorphy: point outside the evaluable region");
    images.push_back(w);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const cplx lhs = form.eval(images[i]).value;
    const cplx rhs = static_cast<double>(r.character_value) * form.eval(points[i]).value;
    r.residuals.push_back(std::abs(lhs - rhs));
    r.max_residual = std::max(r.max_residual, r.residuals.back());
  }
  return r;
}

EigenvalueResult check_eigenvalue(const MaassForm& form, const EvalPoint& z, double h) {
  if (!(h > 0.0) || !(h < z.y)) throw InvalidInput("check_eigenvalue: need 0 < h < y");
  EigenvalueResult r;
  r.eigenvalue = form.eigenvalue();
  const cplx f0 = form.eval(z).value;
  for (int k = 0; k < 3; ++k) {
    const double hk = h / static_cast<double>(1 << k);
    auto shifted = [&](double ddx, double ddy) {
      EvalPoint w = z;
      w.dx += ddx;
      w.y += ddy;
      return form.eval(w).value;
    };
    const cplx lap = (shifted(hk, 0) + shifted(-hk, 0) + shifted(0, hk) + shifted(0, -hk) - 4.0 * f0) / (hk * hk);
    r.residuals[static_cast<std::size_t>(k)] = std::abs(-z.y * z.y * lap - r.eigenvalue * f0);
  }
  r.ratios[0] = r.residuals[0] / r.residuals[1];
  r.ratios[1] = r.residuals[1] / r.residuals[2];
  return r;
}

namespace {

// -1/(N z) with z = x + iy.
EvalPoint fricke(const EvalPoint& z, i64 N) {
  const double x = z.x();
  const double r2 = x * x + z.y * z.y;
  return EvalPoint::from_xy(-x / (static_cast<double>(N) * r2), z.y / (static_cast<double>(N) * r2));
}

double fe_sign(const MaassForm& form) { return form.epsilon() == 0 ? 1.0 : -1.0; }

}  // namespace

double check_functional_equation_at(const MaassForm& form, const std::vector<EvalPoint>& zs) {
  const cplx factor = fe_sign(form) * form.root_number();
  for (const auto& z : zs) {
    if (!form.evaluable(z) || !form.evaluable(fricke(z, form.level()))) {
      throw InvalidInput("check_functional_equation: point outside the evaluable region");
    }
  }
  double worst = 0.0;
  for (const auto& z : zs) {
    const cplx lhs = form.eval(z).value;
    const cplx rhs = factor * form.eval(fricke(z, form.level()), true).value;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double check_functional_equation(const MaassForm& form, const std::vector<double>& ys) {
  std::vector<EvalPoint> zs;
  for (double y : ys) zs.push_back(EvalPoint::from_xy(0.0, y));
  return check_functional_equation_at(form, zs);
}

DecayResult check_cuspidal_decay(const MaassForm& form, Cusp cusp, int t, double x0) {
  if (t < 1) throw InvalidInput("check_cuspidal_decay: t must be at least 1");
  DecayResult r;
  r.ys = {2.0, 4.0, 8.0, 16.0};
  const cplx factor = fe_sign(form) * form.root_number();
  for (double y : r.ys) {
    const EvalPoint z = EvalPoint::from_xy(x0, y);
    // At 0: Theta_psi(W z) = s T Theta_psi-bar(z).
    // The truncation rule drops every term once y > 7; keep a few.
    const i64 n_cut = std::min(form.n_max(), std::max<i64>(MaassForm::required_n(y), 4));
    const cplx v = cusp == Cusp::Infinity ? form.eval(z, false, n_cut).value : factor * form.eval(z, true, n_cut).value;
    r.magnitudes.push_back(std::abs(v));
  }
  if (cusp == Cusp::Zero) {
    for (double y : {2.0, 4.0}) {
      const EvalPoint z = EvalPoint::from_xy(x0, y);
      const EvalPoint wz = fricke(z, form.level());
      if (!form.evaluable(wz)) {
        r.cross_check = std::numeric_limits<double>::quiet_NaN();
        break;
      }
      r.cross_check = std::max(r.cross_check, std::abs(form.eval(wz).value - factor * form.eval(z, true).value));
    }
  }
  r.worst_log2_ratio = -std::numeric_limits<double>::infinity();
  bool ok = true;
  for (std::size_t i = 0; i + 1 < r.magnitudes.size(); ++i) {
    const double lr = std::log2(r.magnitudes[i + 1] / r.magnitudes[i]);
    r.worst_log2_ratio = std::max(r.worst_log2_ratio, lr);
    if (!(lr < -static_cast<double>(t))) ok = false;
  }
  // Norm-induced characters give theta series that fail to vanish at some
  // cusp, so the flag from construction overrides the samples.
  r.decays = ok && form.cuspidal();
  return r;
}

}  // namespace maassforge
