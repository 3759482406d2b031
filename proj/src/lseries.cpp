#include "maassforge/lseries.hpp"

#include <algorithm>
#include <cmath>

namespace maassforge {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
// Terms with smoothing argument beyond this are below e^-60.
constexpr double kZMax = 60.0;

}  // namespace

cplx LSeries::coeff(i64 n) const {
  if (n < 1 || n > n_max()) throw InvalidInput("L-series coefficient index outside 1..n_max");
  return b[static_cast<std::size_t>(n)];
}

cplx LSeries::partial_sum(double s, i64 X) const {
  if (X > n_max()) throw InvalidInput("partial_sum: X exceeds the coefficient table");
  CompensatedSum<cplx> acc;
  for (i64 n = X; n >= 1; --n) {
    const cplx c = b[static_cast<std::size_t>(n)];
    if (c != 0.0) acc.add(c * std::pow(static_cast<double>(n), -s));
  }
  return acc.value();
}

LSeries hecke_l_coeffs(const HeckeCharacter& psi, i64 n_max, int threads) {
  LSeries L;
  L.exact = IdealCoefficients::build(psi, n_max, threads);
  L.b.assign(static_cast<std::size_t>(n_max + 1), 0.0);
  for (i64 n = 1; n <= n_max; ++n) L.b[static_cast<std::size_t>(n)] = L.exact->value(n);
  L.conductor = psi.field().D * psi.conductor_norm();
  L.gamma = psi.infinity();
  L.root_number = psi.root_number();
  L.primitive = true;
  return L;
}

LSeries rankin_coeffs(const MaassForm& form, i64 n_max) {
  if (n_max > form.n_max()) throw InvalidInput("rankin_coeffs: form built to fewer coefficients");
  LSeries L;
  L.b.assign(static_cast<std::size_t>(n_max + 1), 0.0);
  for (i64 n = 1; n <= n_max; ++n) L.b[static_cast<std::size_t>(n)] = std::norm(form.coeff(n));
  L.conductor = form.level() * form.level();
  L.primitive = false;
  return L;
}

SatakeData satake(const HeckeCharacter& psi, i64 p) {
  if (!is_prime(p)) throw InvalidInput("satake: p must be prime");
  const int e = psi.exponent();
  const PrimeSplit sp = split_prime(psi.field(), p);
  SatakeData d;
  d.p = p;
  d.kind = sp.kind;
  switch (sp.kind) {
    case SplitKind::Split: {
      const int a = psi.eval_index(sp.primes_above[0]);
      const int b = psi.eval_index(sp.primes_above[1]);
      d.alpha = root_of_unity(a, e);
      d.beta = root_of_unity(b, e);
      d.trace = CyclotomicInt::root(a, e) + CyclotomicInt::root(b, e);
      d.det = CyclotomicInt::root((a + b) % e, e);
      break;
    }
    case SplitKind::Inert: {
      // alpha + beta = 0, alpha beta = -psi(pO).
      const int k = psi.eval_index(rational_ideal(psi.field(), p));
      d.alpha = root_of_unity(k, 2 * static_cast<i64>(e));
      d.beta = -d.alpha;
      d.trace = CyclotomicInt(e);
      d.det = CyclotomicInt::root(k, e) * -1;
      break;
    }
    case SplitKind::Ramified: {
      const int a = psi.eval_index(sp.primes_above[0]);
      d.alpha = root_of_unity(a, e);
      d.beta = 0.0;
      d.trace = CyclotomicInt::root(a, e);
      d.det = CyclotomicInt(e);
      break;
    }
  }
  return d;
}

RankinResidual rankin_euler_identity_residual(const MaassForm& form, double s, i64 X) {
  if (!(s >= 1.5)) throw InvalidInput("rankin identity: need s >= 1.5");
  if (X < 2 || X > form.n_max()) throw InvalidInput("rankin identity: X outside 2..n_max");
  const HeckeCharacter& psi = form.character();
  const HeckeCharacter pair = psi.product_with_conjugate_sigma();
  const QuadField& field = psi.field();

  RankinResidual r;
  CompensatedSum<double> dir;
  for (i64 n = X; n >= 1; --n) {
    const double c = std::norm(form.coeff(n));
    if (c != 0.0) dir.add(c * std::pow(static_cast<double>(n), -s));
  }
  r.dirichlet = dir.value();

  // log of prod_{p | D} (1 + p^-s)^-1 (1 - chi_D(p) p^-s) * zeta_F(s) / zeta(2s) * L(s, pair).
  CompensatedSum<cplx> log_prod;
  auto log1m = [](cplx z) { return std::log(1.0 - z); };
  for (i64 p : primes_up_to(X)) {
    const double ps = std::pow(static_cast<double>(p), -s);
    const double p2s = ps * ps;
    const PrimeSplit sp = split_prime(field, p);
    cplx lf = std::log1p(-p2s);  // 1/zeta(2s)
    switch (sp.kind) {
      case SplitKind::Ramified:
        lf -= std::log1p(ps);
        lf -= std::log1p(-ps);
        lf -= log1m(pair.eval(sp.primes_above[0]) * ps);
        break;
      case SplitKind::Split:
        lf -= 2.0 * std::log1p(-ps);
        lf -= log1m(pair.eval(sp.primes_above[0]) * ps);
        lf -= log1m(pair.eval(sp.primes_above[1]) * ps);
        break;
      case SplitKind::Inert:
        lf -= std::log1p(-p2s);
        lf -= log1m(pair.eval(rational_ideal(field, p)) * p2s);
        break;
    }
    log_prod.add(lf);
  }
  r.euler = std::exp(log_prod.value());
  r.residual = std::abs(r.dirichlet - r.euler);
  return r;
}

i64 afe_terms_needed(const LSeries& L, double A) {
  if (!(A > 0.0)) throw InvalidInput("afe: A must be positive");
  const double Q = std::sqrt(static_cast<double>(L.conductor));
  return static_cast<i64>(std::ceil(kZMax * Q * std::max(A, 1.0 / A) / (2.0 * kPi)));
}

LValue l_value_afe(const LSeries& L, double s, double A) {
  const i64 N = afe_terms_needed(L, A);
  if (N > L.n_max()) throw InvalidInput("afe: too few coefficients for this cutoff");
  const double Q = std::sqrt(static_cast<double>(L.conductor));
  const int eps = L.gamma.epsilon;
  const double t = L.gamma.nu_im;
  const double s1 = s + eps;
  const double s2 = 1.0 - s + eps;

  CompensatedSum<cplx> S1, S2;
  for (i64 n = N; n >= 1; --n) {
    const cplx c = L.b[static_cast<std::size_t>(n)];
    if (c == 0.0) continue;
    const double nd = static_cast<double>(n);
    const double base = Q / (2.0 * kPi * nd);
    const double ne = eps == 0 ? 1.0 : nd;
    S1.add(c * (ne * std::pow(base, s1) * incomplete_k_mellin(s1, t, 2.0 * kPi * nd * A / Q)));
    S2.add(std::conj(c) * (ne * std::pow(base, s2) * incomplete_k_mellin(s2, t, 2.0 * kPi * nd / (Q * A))));
  }
  const double c = std::exp2(2.0 - eps) * std::pow(2.0 * kPi / Q, eps);
  const double norm = std::pow(Q / kPi, s) * std::exp2(2.0 - s1) * complete_k_mellin(s1, t);

  // Dropped terms: |b(n)| <= 2 sqrt(n) and G_sig(z) <= 2 max(1, z^(sig-1)) e^-z.
  double tail = 0.0;
  auto gbound = [](double sig, double z) { return 2.0 * std::max(1.0, std::pow(z, sig - 1.0)) * std::exp(-z); };
  for (i64 n = N + 1; n <= N + 4000; ++n) {
    const double nd = static_cast<double>(n);
    const double base = Q / (2.0 * kPi * nd);
    const double ne = eps == 0 ? 1.0 : nd;
    tail += 2.0 * std::sqrt(nd) * ne *
            (std::pow(base, s1) * gbound(s1, 2.0 * kPi * nd * A / Q) + std::pow(base, s2) * gbound(s2, 2.0 * kPi * nd / (Q * A)));
  }
  LValue out;
  out.value = c * (S1.value() + L.root_number * S2.value()) / norm;
  out.error_bound = c * tail / norm + 1e-15 * std::abs(out.value);
  out.terms = N;
  return out;
}

LValue l_value_mellin(const LSeries& L) {
  const int eps = L.gamma.epsilon;
  const double t = L.gamma.nu_im;
  const auto bessel = BesselEvaluator::get(t);
  const i64 n_max = L.n_max();
  std::vector<double> re(static_cast<std::size_t>(n_max + 1), 0.0), im(static_cast<std::size_t>(n_max + 1), 0.0);
  for (i64 n = 1; n <= n_max; ++n) {
    const cplx c = L.b[static_cast<std::size_t>(n)] * (eps == 0 ? 1.0 : static_cast<double>(n));
    re[static_cast<std::size_t>(n)] = c.real();
    im[static_cast<std::size_t>(n)] = c.imag();
  }
  const ThetaKernel kernel = select_theta_kernel();
  // u^{1+eps} sum b(n) n^eps K(2 pi n u) at u = e^v.
  auto integrand = [&](double v) -> cplx {
    const double u = std::exp(v);
    const double nc = std::floor(MaassForm::kTruncation / (2.0 * kPi * u));
    if (nc > static_cast<double>(n_max)) throw InvalidInput("mellin L-value: too few coefficients");
    ThetaKernelArgs a;
    a.a_re = re.data();
    a.a_im = im.data();
    a.n_begin = 1;
    a.n_end = static_cast<i64>(nc) + 1;
    a.y = u;
    a.cheb = bessel->panel(0);
    a.degree = BesselEvaluator::kDegree;
    a.min_exp = BesselEvaluator::kMinExp;
    a.panels = BesselEvaluator::kPanels;
    const ThetaSums s = kernel(a);
    return cplx(s.re_cos, s.im_cos) * std::pow(u, 1.0 + eps);
  };

  // Nodes walk down from the Bessel cutoff until the integrand has died out.
  const double v_hi = std::log(MaassForm::kTruncation / (2.0 * kPi));
  const double v_floor = std::log(MaassForm::kTruncation / (2.0 * kPi * static_cast<double>(n_max)));
  double h = 1.0 / 16.0;
  std::vector<cplx> vals;
  CompensatedSum<cplx> acc;
  int quiet = 0;
  for (int k = 0;; ++k) {
    const double v = v_hi - k * h;
    if (v < v_floor) throw InvalidInput("mellin L-value: integrand has not decayed within the coefficient table");
    const cplx f = integrand(v);
    vals.push_back(f);
    acc.add(f);
    quiet = std::abs(f) < 1e-16 * std::max(std::abs(acc.value()), 1e-300) ? quiet + 1 : 0;
    if (quiet >= 8 && k > 16) break;
  }
  const double v_lo = v_hi - static_cast<double>(vals.size() - 1) * h;
  cplx total = acc.value() * h;
  double change = 0.0;
  for (int level = 0; level < 4; ++level) {
    CompensatedSum<cplx> mid;
    const int m = static_cast<int>(std::lround((v_hi - v_lo) / h));
    for (int k = 0; k < m; ++k) mid.add(integrand(v_hi - (k + 0.5) * h));
    const cplx next = 0.5 * total + 0.5 * h * mid.value();
    change = std::abs(next - total);
    total = next;
    h *= 0.5;
    if (change < 1e-14 * std::abs(total)) break;
  }
  const double scale = std::pow(2.0 * kPi, 1.0 + eps) / complete_k_mellin(1.0 + eps, t);
  LValue out;
  out.value = scale * total;
  out.error_bound = scale * change + 1e-14 * std::abs(out.value);
  out.terms = static_cast<i64>(std::floor(MaassForm::kTruncation / (2.0 * kPi * std::exp(v_lo))));
  return out;
}

LValue l_value_at_1(const HeckeCharacter& psi_pair, int threads) {
  if (psi_pair.is_trivial()) throw InvalidInput("L(1): trivial character has a pole at s = 1");
  LSeries probe;
  probe.conductor = psi_pair.field().D * psi_pair.conductor_norm();
  const i64 N = std::max<i64>(afe_terms_needed(probe, 2.0), 64);
  const LSeries L = hecke_l_coeffs(psi_pair, N, threads);
  const LValue a = l_value_afe(L, 1.0, 1.0);
  const LValue b = l_value_afe(L, 1.0, 2.0);
  LValue out = a;
  out.error_bound = std::abs(a.value - b.value) + a.error_bound + b.error_bound;
  return out;
}

}  // namespace maassforge
