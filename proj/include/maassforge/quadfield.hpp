#pragma once

#include <compare>
#include <string>
#include <vector>

#include "maassforge/arith.hpp"

namespace maassforge {

/// Real quadratic field Q(sqrt D) with D a fundamental discriminant.
/// The ring of integers is Z[omega], omega = (1+sqrt D)/2 or sqrt D/2.
struct QuadField {
  i64 D = 0;
  bool omega_half = false;  // true iff D = 1 mod 4
  i64 t = 0;                // trace of omega
  i64 n = 0;                // norm of omega
  double sqrtD = 0.0;

  /// Throws InvalidInput unless D is a positive fundamental discriminant.
  static QuadField make(i64 D);
  static bool is_fundamental(i64 D);

  /// omega under the embedding sqrt D > 0, and its conjugate.
  double omega() const;
  double omega_conj() const;

  bool operator==(const QuadField& o) const { return D == o.D; }
};

/// Integral ideal k * (aZ + (b+omega)Z), 0 <= b < a, a | N(b+omega).
struct QfIdeal {
  i64 D = 0;
  i64 k = 1;
  i64 a = 1;
  i64 b = 0;
  i64 norm = 1;  // k^2 a

  auto operator<=>(const QfIdeal& o) const {
    if (auto c = a <=> o.a; c != 0) return c;
    if (auto c = b <=> o.b; c != 0) return c;
    return k <=> o.k;
  }
  bool operator==(const QfIdeal& o) const { return D == o.D && k == o.k && a == o.a && b == o.b; }
  std::string to_string() const;
};

enum class SplitKind { Split, Inert, Ramified };
const char* to_string(SplitKind kind);

struct PrimeSplit {
  i64 p = 0;
  SplitKind kind = SplitKind::Inert;
  std::vector<QfIdeal> primes_above;  // two (split), one (ramified), none (inert)
};

/// Kronecker symbol (D/n).
int kronecker_chi_D(const QuadField& field, i64 n);

QfIdeal unit_ideal(const QuadField& field);
/// The ideal m O_F for m >= 1.
QfIdeal rational_ideal(const QuadField& field, i64 m);
/// Canonical form of k(aZ + (b+omega)Z); throws InvalidInput if the
/// lattice is not an O_F-ideal.
QfIdeal make_ideal(const QuadField& field, i64 k, i64 a, i64 b);
bool is_valid_ideal(const QuadField& field, i64 a, i64 b);

QfIdeal ideal_conj(const QuadField& field, const QfIdeal& x);
/// Product in canonical form. Throws InvalidInput when the fields differ.
QfIdeal ideal_mul(const QuadField& field, const QfIdeal& x, const QfIdeal& y);
QfIdeal ideal_pow(const QuadField& field, const QfIdeal& x, int e);

/// Decomposition of the rational prime p (throws InvalidInput if p is not prime).
PrimeSplit split_prime(const QuadField& field, i64 p);

struct IdealsByNorm {
  i64 norm;
  std::vector<QfIdeal> ideals;
};

inline constexpr i64 kDefaultIdealCap = 10'000'000;

/// All integral ideals of norm <= max_norm, grouped by norm in increasing
/// order; within each norm sorted by (a, b, k). Throws ResourceLimit if
/// more than cap ideals would be produced.
std::vector<IdealsByNorm> enumerate_ideals(const QuadField& field, i64 max_norm,
                                           i64 cap = kDefaultIdealCap);

/// Number of ideals of norm n, from the divisor sum of chi_D.
i64 ideal_count(const QuadField& field, i64 n);

}  // namespace maassforge
