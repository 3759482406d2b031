#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace maassforge {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

/// Raised when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a configured size cap (ideal count, class count) is exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

i64 gcd(i64 a, i64 b);
i64 mod(i64 a, i64 m);  // result in [0, |m|)

struct ExtGcd {
  i64 g;  // >= 0
  i64 u;
  i64 v;  // u*a + v*b == g
};
ExtGcd ext_gcd(i64 a, i64 b);

i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, u64 exp, i64 m);
i64 inv_mod(i64 a, i64 m);

/// Floor of the square root, exact for all non-negative 64-bit inputs.
i64 isqrt(i64 n);
bool is_square(i64 n);
bool is_prime(i64 n);
bool is_squarefree(i64 n);

/// Kronecker symbol (a/n) for arbitrary integers.
int kronecker(i64 a, i64 n);

/// Square root of a modulo an odd prime p by Tonelli–Shanks. The
/// non-residue is found by scanning 2, 3, ... so the result is reproducible.
/// Requires a to be a square mod p; throws InvalidInput otherwise.
i64 sqrt_mod_prime(i64 a, i64 p);

struct PrimePower {
  i64 p;
  int e;
};
std::vector<PrimePower> factorize(i64 n);
i64 euler_phi(i64 n);
std::vector<i64> divisors(i64 n);
i64 primitive_root(i64 p);

std::vector<i64> primes_up_to(i64 n);

/// Smallest-prime-factor table on [0, n].
class SpfSieve {
 public:
  explicit SpfSieve(i64 n);
  i64 limit() const { return static_cast<i64>(spf_.size()) - 1; }
  i64 spf(i64 k) const { return spf_[static_cast<std::size_t>(k)]; }
  bool is_prime(i64 k) const { return k >= 2 && spf(k) == k; }
  std::vector<PrimePower> factorize(i64 k) const;

 private:
  std::vector<std::int32_t> spf_;
};

}  // namespace maassforge
