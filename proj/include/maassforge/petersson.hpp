#pragma once

#include <optional>

#include "maassforge/lseries.hpp"

namespace maassforge {

/// p/q in lowest terms.
struct Fraction {
  i64 num = 0;
  i64 den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// (D N)^2 / (4 pi phi(D N)).
double constant_c1(i64 D, i64 Nf);
/// Gamma(1/2 + nu) Gamma(1/2 - nu) for nu = i nu_im.
double constant_c2(double nu_im);
/// prod_{p | D N(f)} (1 - 1/p)(1 - chi_D(p)/p); the split-prime product
/// over primes dividing N(f) is empty for f = (1).
Fraction constant_c3_exact(const QuadField& field, i64 Nf);
double constant_c3(const QuadField& field, i64 Nf);
/// 2 h R / sqrt(D) (two real places, w = 2, wide class number h).
double residue_zeta_F(const QuadField& field, const FundamentalUnit& unit, int h_wide);

struct PeterssonReport {
  i64 D = 0;
  int char_index = 0;
  int order = 1;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double res_zeta_f = 0.0;
  double l_value = 0.0;
  double l_error = 0.0;
  double total = 0.0;
  std::optional<double> paper_value;
  std::optional<double> rel_err;
};

/// <Theta_psi, Theta_psi> = C1 C2 C3 Res zeta_F L(1, psi (psi-bar o sigma)).
/// Throws InvalidInput for norm-induced psi.
PeterssonReport petersson_norm(const HeckeCharacter& psi, int threads = 0);

/// Published decimals for the worked examples: 229 and 445 give the norm of
/// an order-3 and order-4 character, 401 the product over psi and psi^2.
std::optional<double> paper_reference(i64 D);

struct ExampleResult {
  std::vector<PeterssonReport> reports;  // one, or psi and psi^2 for 401
  double value = 0.0;                    // the quantity compared to the paper
  double paper_value = 0.0;
  double rel_err = 0.0;
};
/// Runs the pipeline for D in {229, 445, 401}.
ExampleResult reproduce_example(i64 D, int threads = 0);

}  // namespace maassforge
