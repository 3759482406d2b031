#include "maassforge/petersson.hpp"

#include <cmath>

namespace maassforge {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

int first_character_of_order(const std::shared_ptr<const ClassGroup>& cg, int order) {
  for (int k = 0; k < cg->h_narrow(); ++k) {
    const auto psi = HeckeCharacter::make_class_character(cg, k, {HeckeCharacter::natural_epsilon(*cg, k), 0.0});
    if (psi.order() == order) return k;
  }
  throw InternalError("no class character of the requested order");
}

}  // namespace

double constant_c1(i64 D, i64 Nf) {
  if (D < 1 || Nf < 1) throw InvalidInput("constant_c1: need D, N(f) >= 1");
  const double m = static_cast<double>(D * Nf);
  return m * m / (4.0 * kPi * static_cast<double>(euler_phi(D * Nf)));
}

double constant_c2(double nu_im) {
  // Gamma(1/2 + it) Gamma(1/2 - it) = |Gamma(1/2 + it)|^2.
  return std::exp(2.0 * log_gamma(cplx(0.5, nu_im)).real());
}

Fraction constant_c3_exact(const QuadField& field, i64 Nf) {
  i64 num = 1;
  i64 den = 1;
  for (const auto& pp : factorize(field.D * Nf)) {
    const i64 p = pp.p;
    const int chi = kronecker_chi_D(field, p);
    num *= (p - 1) * (p - chi);
    den *= p * p;
    const i64 g = gcd(num, den);
    num /= g;
    den /= g;
  }
  return {num, den};
}

double constant_c3(const QuadField& field, i64 Nf) { return constant_c3_exact(field, Nf).value(); }

double residue_zeta_F(const QuadField& field, const FundamentalUnit& unit, int h_wide) {
  if (!(unit.regulator > 0.0)) throw InvalidInput("residue_zeta_F: regulator must be positive");
  return 2.0 * h_wide * unit.regulator / std::sqrt(static_cast<double>(field.D));
}

PeterssonReport petersson_norm(const HeckeCharacter& psi, int threads) {
  if (psi.is_norm_induced()) throw InvalidInput("petersson: character is norm-induced; the theta series is not cuspidal");
  const QuadField& field = psi.field();
  PeterssonReport r;
  r.D = field.D;
  r.char_index = psi.index();
  r.order = psi.order();
  r.c1 = constant_c1(field.D, psi.conductor_norm());
  r.c2 = constant_c2(psi.infinity().nu_im);
  r.c3 = constant_c3(field, psi.conductor_norm());
  r.res_zeta_f = residue_zeta_F(field, psi.class_group().unit(), psi.class_group().h_wide());
  const LValue L = l_value_at_1(psi.product_with_conjugate_sigma(), threads);
  r.l_value = L.value.real();
  r.l_error = L.error_bound + std::abs(L.value.imag());
  r.total = r.c1 * r.c2 * r.c3 * r.res_zeta_f * r.l_value;
  return r;
}

std::optional<double> paper_reference(i64 D) {
  switch (D) {
    case 229:
      return 38.3345331336184;
    case 445:
      return 81.0223272397348;
    case 401:
      return 12489.3392834563;
    default:
      return std::nullopt;
  }
}

ExampleResult reproduce_example(i64 D, int threads) {
  const auto ref = paper_reference(D);
  if (!ref) throw InvalidInput("reproduce: example must be 229, 445 or 401");
  auto cg = std::make_shared<const ClassGroup>(ClassGroup::build(QuadField::make(D)));
  const int order = D == 229 ? 3 : D == 445 ? 4 : 5;
  const int k = first_character_of_order(cg, order);
  const auto psi = HeckeCharacter::make_class_character(cg, k, {HeckeCharacter::natural_epsilon(*cg, k), 0.0});
  ExampleResult out;
  out.reports.push_back(petersson_norm(psi, threads));
  out.value = out.reports[0].total;
  if (D == 401) {
    out.reports.push_back(petersson_norm(psi.power(2), threads));
    out.value *= out.reports[1].total;
  }
  out.paper_value = *ref;
  out.rel_err = std::abs(out.value - out.paper_value) / out.paper_value;
  for (auto& r : out.reports) {
    if (D != 401) {
      r.paper_value = out.paper_value;
      r.rel_err = out.rel_err;
    }
  }
  return out;
}

}  // namespace maassforge
