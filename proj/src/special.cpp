#include "maassforge/special.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace maassforge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr double kStirling[] = {
    1.0 / 12.0,         -1.0 / 360.0,        1.0 / 1260.0,      -1.0 / 1680.0,     1.0 / 1188.0,
    -691.0 / 360360.0,  1.0 / 156.0,         -3617.0 / 122400.0, 43867.0 / 244188.0, -174611.0 / 125400.0,
};

cplx log_gamma_stirling(cplx z) {
  // Shift so that Re z >= 15.
  cplx shift = 1.0;
  bool shifted = false;
  while (z.real() < 15.0) {
    shift *= z;
    z += 1.0;
    shifted = true;
  }
  const cplx zi = 1.0 / z;
  const cplx zi2 = zi * zi;
  cplx series = 0.0;
  cplx pw = zi;
  for (double c : kStirling) {
    series += c * pw;
    pw *= zi2;
  }
  cplx r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
  if (shifted) r -= std::log(shift);
  return r;
}

bool is_pole(cplx z) { return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()); }

// Gamma(a, x) by the Legendre continued fraction (modified Lentz).
double upper_gamma_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

// Lower incomplete gamma by its power series, a > 0.
double lower_gamma_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + a * std::log(x));
}

double trapezoid_halving(const auto& f, double u_max, double h0, double rel_tol, int max_levels) {
  // Even integrand on [0, u_max]: h (f(0)/2 + sum_k f(kh)).
  double h = h0;
  int n = static_cast<int>(std::ceil(u_max / h));
  h = u_max / n;
  double sum = 0.5 * f(0.0);
  double abs_sum = std::abs(sum);
  for (int k = 1; k <= n; ++k) {
    const double v = f(k * h);
    sum += v;
    abs_sum += std::abs(v);
  }
  double prev = sum * h;
  for (int level = 0; level < max_levels; ++level) {
    double mid = 0.0;
    for (int k = 0; k < n; ++k) {
      const double v = f((k + 0.5) * h);
      mid += v;
      abs_sum += std::abs(v);
    }
    sum += mid;
    n *= 2;
    h *= 0.5;
    const double cur = sum * h;
    if (std::abs(cur - prev) <= rel_tol * abs_sum * h) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_pole(z)) throw std::domain_error("log_gamma: pole");
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_stirling(1.0 - z);
  }
  return log_gamma_stirling(z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

double expint_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("expint_e1: x must be positive");
  if (x <= 1.0) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k < 200; ++k) {
      term *= -x / k;
      const double add = -term / k;
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

double upper_gamma(double a, double x) {
  if (!(x > 0.0)) throw std::domain_error("upper_gamma: x must be positive");
  if (a == 0.0) return expint_e1(x);
  if (x > 1.5 && x > a - 1.0) return upper_gamma_cf(a, x);
  if (a > 0.0) {
    if (x > a + 1.0) return upper_gamma_cf(a, x);
    return std::tgamma(a) - lower_gamma_series(a, x);
  }
  // a < 0: recurse downward from a + k in (0, 1], or from 0 if a is an integer.
  const double k = std::ceil(-a);
  double a0 = a + k;
  double g;
  if (a0 == 0.0) {
    g = expint_e1(x);
  } else {
    g = std::tgamma(a0) - lower_gamma_series(a0, x);
  }
  const double lx = std::log(x);
  for (double b = a0 - 1.0; b >= a - 0.5; b -= 1.0) {
    // Gamma(b, x) = (Gamma(b+1, x) - x^b e^{-x}) / b
    g = (g - std::exp(b * lx - x)) / b;
  }
  return g;
}

double bessel_k_scaled(double t, double y) {
  if (!(y > 0.0)) throw std::domain_error("bessel_k: y must be positive");
  const double u_max = std::acosh(1.0 + 46.0 / y);
  const double h0 = std::min({0.25, 0.5 / std::sqrt(y), kPi / (4.0 * std::max(std::abs(t), 1.0))});
  const auto f = [t, y](double u) {
    const double sh = std::sinh(0.5 * u);
    const double e = std::exp(-2.0 * y * sh * sh);
    return t == 0.0 ? e : e * std::cos(t * u);
  };
  return trapezoid_halving(f, u_max, h0, 1e-16, 10);
}

double bessel_k(double t, double y) { return std::exp(-y) * bessel_k_scaled(t, y); }

BesselEvaluator::BesselEvaluator(double t) : t_(t) {
  constexpr int n = kDegree + 1;
  coeffs_.assign(static_cast<std::size_t>(kPanels * n), 0.0);
  std::vector<double> nodes(n);
  for (int k = 0; k < n; ++k) nodes[static_cast<std::size_t>(k)] = std::cos(kPi * (k + 0.5) / n);
  std::vector<double> fv(n);
  for (int p = 0; p < kPanels; ++p) {
    const double a = std::ldexp(1.0, kMinExp + p);
    for (int k = 0; k < n; ++k) {
      const double x = a * (1.5 + 0.5 * nodes[static_cast<std::size_t>(k)]);
      fv[static_cast<std::size_t>(k)] = bessel_k_scaled(t, x);
    }
    double* c = coeffs_.data() + static_cast<std::size_t>(p) * n;
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += fv[static_cast<std::size_t>(k)] * std::cos(kPi * j * (k + 0.5) / n);
      c[j] = 2.0 * s / n;
    }
    c[0] *= 0.5;
  }
}

std::shared_ptr<const BesselEvaluator> BesselEvaluator::get(double t) {
  static std::mutex mu;
  static std::map<double, std::shared_ptr<const BesselEvaluator>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[t];
  if (!slot) slot = std::make_shared<const BesselEvaluator>(t);
  return slot;
}

double BesselEvaluator::x_min() const { return std::ldexp(1.0, kMinExp); }
double BesselEvaluator::x_max() const { return std::ldexp(1.0, kMaxExp); }

double BesselEvaluator::scaled(double x) const {
  if (!(x >= x_min() && x < x_max())) return bessel_k_scaled(t_, x);
  int e;
  const double m = std::frexp(x, &e);  // x = m 2^e, m in [0.5, 1)
  const int p = e - 1 - kMinExp;
  const double tau = 4.0 * m - 3.0;
  const double* c = panel(p);
  // Clenshaw recurrence.
  double b1 = 0.0;
  double b2 = 0.0;
  const double tt = 2.0 * tau;
  for (int j = kDegree; j >= 1; --j) {
    const double b0 = tt * b1 - b2 + c[j];
    b2 = b1;
    b1 = b0;
  }
  return tau * b1 - b2 + c[0];
}

double BesselEvaluator::operator()(double x) const { return std::exp(-x) * scaled(x); }

cplx mellin_k_moment(double t, cplx s) {
  const cplx nu(0.0, t);
  const cplx lg = (s - 3.0) * std::log(2.0) - log_gamma(s) + log_gamma((s + 2.0 * nu) / 2.0) +
                  2.0 * log_gamma(s / 2.0) + log_gamma((s - 2.0 * nu) / 2.0);
  return std::exp(lg);
}

double complete_k_mellin(double s, double t) {
  if (!(s > 0.0)) throw std::domain_error("complete_k_mellin: s must be positive");
  const cplx g = gamma(cplx(s, t) / 2.0);
  return std::exp2(s - 2.0) * std::norm(g);
}

double incomplete_k_mellin(double s, double t, double z) {
  if (z < 0.0) throw std::domain_error("incomplete_k_mellin: z must be non-negative");
  if (z == 0.0) return complete_k_mellin(s, t);
  if (z > 700.0) return 0.0;
  const double u_max = std::acosh(std::max(1.0 + 1e-12, (z + 45.0) / z));
  const double h0 = std::min({0.2, 0.5 / std::sqrt(z), kPi / (4.0 * std::max(std::abs(t), 1.0))});
  const auto f = [s, t, z](double u) {
    const double c = std::cosh(u);
    const double v = std::pow(c, -s) * upper_gamma(s, z * c);
    return t == 0.0 ? v : v * std::cos(t * u);
  };
  return trapezoid_halving(f, u_max, h0, 1e-15, 10);
}

double smoothing_weight(double x, const SmoothingSpec& spec) {
  if (!(x > 0.0)) throw std::domain_error("smoothing_weight: x must be positive");
  return incomplete_k_mellin(spec.s, spec.t, 2.0 * kPi * x) / complete_k_mellin(spec.s, spec.t);
}

}  // namespace maassforge
