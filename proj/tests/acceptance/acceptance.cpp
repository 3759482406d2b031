// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Optional argv[1]: path of the maassforge executable, used for the exit-code checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <sys/wait.h>

#include "maassforge/lseries.hpp"
#include "maassforge/petersson.hpp"

using namespace maassforge;

namespace {

std::string g_cli;

struct Outcome {
  bool pass;
  std::string detail;
};

std::shared_ptr<const ClassGroup> group(i64 D) {
  return std::make_shared<const ClassGroup>(ClassGroup::build(QuadField::make(D)));
}

HeckeCharacter character(i64 D, int k) {
  auto cg = group(D);
  return HeckeCharacter::make_class_character(cg, k, {HeckeCharacter::natural_epsilon(*cg, k), 0.0});
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

int cli_exit(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome reproduce(i64 D, double budget_s) {
  const auto t0 = std::chrono::steady_clock::now();
  const ExampleResult e = reproduce_example(D, 0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = e.rel_err < 1e-6 && secs < budget_s;
  std::string detail = "value " + fmt("%.15g", e.value) + ", rel err " + fmt("%.3g", e.rel_err) + ", " +
                       fmt("%.2f", secs) + " s";
  if (!g_cli.empty()) {
    const int rc = cli_exit("reproduce --example " + std::to_string(D));
    ok = ok && rc == 0;
    detail += ", cli exit " + std::to_string(rc);
  }
  return {ok, detail};
}

Outcome a4() {
  bool ok = true;
  std::string detail;
  for (auto [D, h] : {std::pair<i64, int>{229, 3}, {445, 4}, {401, 5}}) {
    const auto cg = group(D);
    ok = ok && cg->h_wide() == h;
    detail += "h(" + std::to_string(D) + ")=" + std::to_string(cg->h_wide()) + " ";
  }
  const auto& u = group(229)->unit();
  // (x + y sqrt D)/2 has norm (x^2 - D y^2)/4.
  const BigInt norm4 = u.x * u.x - BigInt(229) * u.y * u.y;
  ok = ok && u.x == 15 && u.y == 1 && u.norm == -1 && norm4 == -4;
  detail += "unit (" + u.x.str() + "+" + u.y.str() + "sqrt229)/2 norm " + std::to_string(u.norm);
  return {ok, detail};
}

Outcome a5() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Mat2> mats;
  const std::pair<i64, i64> cd[] = {{229, 1},  {229, 2},   {-229, 3}, {229, 7},  {458, 1},
                                    {458, 3},  {-458, 5},  {687, 1},  {687, 2},  {-687, 5}};
  for (auto [c, d] : cd) {
    const ExtGcd g = ext_gcd(d, c);
    mats.push_back({g.u, -g.v, c, d});
  }
  std::vector<std::vector<EvalPoint>> pts(mats.size());
  double y_low = 1e300;
  for (std::size_t m = 0; m < mats.size(); ++m) {
    for (int i = 0; i < 5; ++i) {
      const double x = -static_cast<double>(mats[m].d) / static_cast<double>(mats[m].c) + 1e-3 * (i - 2);
      pts[m].push_back(EvalPoint::from_xy(x, 0.3 + 0.025 * i));
      y_low = std::min(y_low, act(mats[m], pts[m].back()).y);
    }
  }
  const auto f = MaassForm::build(character(229, 1), MaassForm::required_n(y_low), 0);
  double worst = 0.0;
  for (std::size_t m = 0; m < mats.size(); ++m) worst = std::max(worst, check_automorphy(f, mats[m], pts[m]).max_residual);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst < 1e-8 && secs < 300.0, "max residual " + fmt("%.3g", worst) + ", n_max " +
                                            std::to_string(f.n_max()) + ", " + fmt("%.2f", secs) + " s"};
}

Outcome a6() {
  const auto f = MaassForm::build(character(229, 1), 5000);
  const auto r = check_eigenvalue(f, EvalPoint::from_xy(0.3, 0.7), 0.01);
  const bool ok = r.ratios[0] >= 3.5 && r.ratios[0] <= 4.5 && r.ratios[1] >= 3.5 && r.ratios[1] <= 4.5;
  return {ok, "ratios " + fmt("%.4f", r.ratios[0]) + ", " + fmt("%.4f", r.ratios[1])};
}

Outcome a7() {
  const auto f = MaassForm::build(character(229, 1), 20000);
  const double y0 = 1.0 / std::sqrt(229.0);
  const double res = check_functional_equation(f, {0.8 * y0, 0.9 * y0, y0, 1.1 * y0, 1.25 * y0});
  const bool unit_root = f.root_number() == std::complex<double>(1.0, 0.0);
  return {res < 1e-8 && unit_root, "max residual " + fmt("%.3g", res) + ", T = " + (unit_root ? "1" : "?")};
}

Outcome a8() {
  // |tau|^2 = p for 20 primitive characters spread over the primes below 100.
  int count = 0;
  double worst_abs = 0.0;
  const auto primes = primes_up_to(100);
  for (std::size_t i = 1; i < primes.size() && count < 20; ++i) {
    const i64 p = primes[i];
    const auto chi = DirichletCharacter::from_prime(p, 1 + static_cast<int>(i % static_cast<std::size_t>(p - 2)));
    if (!chi.is_primitive()) continue;
    worst_abs = std::max(worst_abs, std::abs(std::norm(gauss_sum_rational(chi).value) - static_cast<double>(p)) / p);
    ++count;
  }
  // tau_F(sigma o N) against tau(sigma)^2 for three inert primes.
  const auto F = QuadField::make(229);
  int inert = 0;
  double worst_rel = 0.0;
  for (i64 p : primes_up_to(50)) {
    if (p == 2 || kronecker_chi_D(F, p) != -1 || inert == 3) continue;
    for (int k = 1; k < p - 1; ++k) worst_rel = std::max(worst_rel, check_gauss_relation(F, p, DirichletCharacter::from_prime(p, k)).residual);
    ++inert;
  }
  // tau(chi1 chi2) = chi1(q) chi2(p) tau(chi1) tau(chi2) for coprime moduli.
  double worst_twist = 0.0;
  for (auto [p, q] : {std::pair<i64, i64>{3, 5}, {5, 7}, {7, 11}, {13, 29}, {17, 19}}) {
    const auto c1 = DirichletCharacter::from_prime(p, 1);
    const auto c2 = DirichletCharacter::from_prime(q, 1);
    const auto lhs = gauss_sum_rational(c1 * c2).value;
    const auto rhs = c1(q) * c2(p) * gauss_sum_rational(c1).value * gauss_sum_rational(c2).value;
    worst_twist = std::max(worst_twist, std::abs(lhs - rhs));
  }
  const bool ok = count == 20 && inert == 3 && worst_abs < 1e-9 && worst_rel < 1e-9 && worst_twist < 1e-9;
  return {ok, std::to_string(count) + " characters |tau|^2 rel " + fmt("%.2g", worst_abs) + "; " +
                  std::to_string(inert) + " inert primes " + fmt("%.2g", worst_rel) + "; twisting " +
                  fmt("%.2g", worst_twist)};
}

Outcome a9() {
  const auto f = MaassForm::build(character(229, 1), 800000, 0);
  std::string detail;
  double prev = 1e300;
  bool monotone = true;
  double at_1e5 = 0.0;
  for (i64 X : {100000, 200000, 400000, 800000}) {
    const double r = rankin_euler_identity_residual(f, 2.0, X).residual;
    if (X == 100000) at_1e5 = r;
    monotone = monotone && r < prev;
    prev = r;
    detail += "X=" + std::to_string(X) + ": " + fmt("%.3g", r) + "  ";
  }
  return {at_1e5 < 1e-6 && monotone, detail + (monotone ? "(decreasing)" : "(not decreasing)")};
}

Outcome a10() {
  auto cg = group(40);
  int k2 = -1;
  for (int k = 0; k < cg->h_narrow(); ++k) {
    if (character(40, k).order() == 2) k2 = k;
  }
  if (k2 < 0) return {false, "no order-2 character"};
  const auto psi = character(40, k2);
  bool refused = false;
  try {
    petersson_norm(psi, 0);
  } catch (const InvalidInput&) {
    refused = true;
  }
  bool ok = psi.is_norm_induced() && refused;
  std::string detail = std::string("norm-induced ") + (psi.is_norm_induced() ? "yes" : "no") + ", library refuses " +
                       (refused ? "yes" : "no");
  if (!g_cli.empty()) {
    const int rc = cli_exit("petersson --disc 40 --char " + std::to_string(k2));
    ok = ok && rc == 2;
    detail += ", cli exit " + std::to_string(rc);
  }
  return {ok, detail};
}

Outcome a11() {
  i64 checks = 0;
  i64 bad = 0;
  for (i64 D : {229, 401, 445}) {
    auto cg = group(D);
    for (int k = 0; k < cg->h_narrow(); ++k) {
      const auto psi = character(D, k);
      const auto f = MaassForm::build(psi, 200 * 200, 0);
      for (i64 m = 1; m <= 200; ++m) {
        for (i64 n = 1; n <= 200; ++n) {
          if (gcd(m, n) != 1) continue;
          bad += (f.coeff_exact(m) * f.coeff_exact(n)).reduced() != f.coeff_exact(m * n).reduced();
          ++checks;
        }
      }
      const int e = psi.exponent();
      for (i64 p : primes_up_to(50)) {
        const CyclotomicInt twist =
            CyclotomicInt::integer(kronecker_chi_D(psi.field(), p), e) * psi.eval_exact(rational_ideal(psi.field(), p));
        for (int r = 1; r <= 4; ++r) {
          const CyclotomicInt rhs = f.local_coeff(p, 1) * f.local_coeff(p, r) - twist * f.local_coeff(p, r - 1);
          bad += f.local_coeff(p, r + 1).reduced() != rhs.reduced();
          ++checks;
        }
      }
    }
  }
  return {bad == 0, std::to_string(checks) + " exact identities, " + std::to_string(bad) + " mismatches"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"A1 reproduce D=229", [] { return reproduce(229, 60.0); }},
      {"A2 reproduce D=445", [] { return reproduce(445, 60.0); }},
      {"A3 reproduce D=401", [] { return reproduce(401, 120.0); }},
      {"A4 class groups and unit", a4},
      {"A5 automorphy under Gamma0(229)", a5},
      {"A6 Laplace eigenvalue O(h^2)", a6},
      {"A7 functional equation", a7},
      {"A8 Gauss sum identities", a8},
      {"A9 Rankin Euler identity", a9},
      {"A10 norm-induced negative control", a10},
      {"A11 exact multiplicativity and Hecke recursion", a11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
