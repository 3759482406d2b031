#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "maassforge/petersson.hpp"

using namespace maassforge;

namespace {

std::shared_ptr<const ClassGroup> group(i64 D) {
  return std::make_shared<const ClassGroup>(ClassGroup::build(QuadField::make(D)));
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("constants") {
  CHECK(constant_c1(229, 1) == doctest::Approx(229.0 * 229.0 / (4 * kPi * 228)).epsilon(1e-15));
  CHECK(constant_c1(1, 1) == doctest::Approx(1 / (4 * kPi)).epsilon(1e-15));
  CHECK(constant_c1(445, 1) == doctest::Approx(445.0 * 445.0 / (4 * kPi * 352)).epsilon(1e-15));
  CHECK(constant_c2(0.0) == doctest::Approx(kPi).epsilon(1e-15));
  // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
  for (double t : {0.5, 1.0, 3.7}) CHECK(constant_c2(t) == doctest::Approx(kPi / std::cosh(kPi * t)).epsilon(1e-12));
  const Fraction c229 = constant_c3_exact(QuadField::make(229), 1);
  CHECK(c229.num == 228);
  CHECK(c229.den == 229);
  const Fraction c445 = constant_c3_exact(QuadField::make(445), 1);
  CHECK(c445.num == 352);
  CHECK(c445.den == 445);
  // C1 C2 C3 = D/4 for unramified characters.
  for (i64 D : {5, 12, 40, 229, 401, 445, 136}) {
    const QuadField F = QuadField::make(D);
    CHECK(constant_c1(D, 1) * constant_c2(0.0) * constant_c3(F, 1) == doctest::Approx(D / 4.0).epsilon(1e-14));
  }
}

TEST_CASE("residue of the Dedekind zeta function") {
  auto cg = group(401);
  CHECK(cg->h_wide() == 5);
  const double r = residue_zeta_F(cg->field(), cg->unit(), cg->h_wide());
  CHECK(r == doctest::Approx(10.0 * cg->unit().regulator / std::sqrt(401.0)).epsilon(1e-15));
  // With C1 C2 C3 = 401/4 this is (5/2) sqrt(401) R.
  CHECK(401.0 / 4.0 * r == doctest::Approx(2.5 * std::sqrt(401.0) * cg->unit().regulator).epsilon(1e-14));
  auto c229 = group(229);
  CHECK(residue_zeta_F(c229->field(), c229->unit(), c229->h_wide()) ==
        doctest::Approx(6.0 * std::log((15.0 + std::sqrt(229.0)) / 2.0) / std::sqrt(229.0)).epsilon(1e-14));
  // Partial sums of ideal counts: sum_{n <= x} d_F(n) ~ Res x.
  auto c5 = group(5);
  const double res5 = residue_zeta_F(c5->field(), c5->unit(), c5->h_wide());
  i64 count = 0;
  const i64 x = 400000;
  for (const auto& b : enumerate_ideals(c5->field(), x)) count += static_cast<i64>(b.ideals.size());
  CHECK(static_cast<double>(count) / x == doctest::Approx(res5).epsilon(2e-3));
}

TEST_CASE("worked examples") {
  const auto e229 = reproduce_example(229);
  CHECK(e229.rel_err < 1e-6);
  const auto e445 = reproduce_example(445);
  CHECK(e445.rel_err < 1e-6);
  const auto e401 = reproduce_example(401);
  CHECK(e401.rel_err < 1e-6);
  REQUIRE(e401.reports.size() == 2);
  for (const auto& r : {e229.reports[0], e445.reports[0]}) {
    CHECK(r.total == doctest::Approx(r.c1 * r.c2 * r.c3 * r.res_zeta_f * r.l_value).epsilon(1e-15));
    CHECK(r.c1 > 0);
    CHECK(r.c2 > 0);
    CHECK(r.c3 > 0);
    CHECK(r.l_error < 1e-10);
  }
  CHECK_THROWS_AS(reproduce_example(12), InvalidInput);
}

TEST_CASE("conjugate and Galois-conjugate characters give equal norms") {
  auto cg = group(401);
  std::vector<double> totals;
  for (int k = 1; k < 5; ++k) totals.push_back(petersson_norm(HeckeCharacter::make_class_character(cg, k)).total);
  const auto psi = HeckeCharacter::make_class_character(cg, 1);
  const double t1 = petersson_norm(psi).total;
  CHECK(petersson_norm(psi.conjugate()).total == doctest::Approx(t1).epsilon(1e-13));
  CHECK(petersson_norm(psi.power(4)).total == doctest::Approx(t1).epsilon(1e-13));
  CHECK(petersson_norm(psi.power(2)).total == doctest::Approx(petersson_norm(psi.power(3)).total).epsilon(1e-13));
}

TEST_CASE("both L(1) routes give the same total") {
  for (i64 D : {229, 445}) {
    auto cg = group(D);
    const auto psi = HeckeCharacter::make_class_character(cg, 1);
    const auto r = petersson_norm(psi);
    const auto pair = psi.product_with_conjugate_sigma();
    const auto L = hecke_l_coeffs(pair, 60 * D);
    const double via_mellin = r.c1 * r.c2 * r.c3 * r.res_zeta_f * l_value_mellin(L).value.real();
    CHECK(std::abs(via_mellin - r.total) < 1e-8 * r.total);
  }
}

TEST_CASE("norm-induced characters are refused") {
  auto cg = group(40);
  for (int k = 0; k < cg->h_narrow(); ++k) {
    const auto psi = HeckeCharacter::make_class_character(cg, k, {HeckeCharacter::natural_epsilon(*cg, k), 0.0});
    if (psi.is_norm_induced()) CHECK_THROWS_AS(petersson_norm(psi), InvalidInput);
  }
}
