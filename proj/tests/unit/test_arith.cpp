#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maassforge/arith.hpp"

using namespace maassforge;

namespace {

// Legendre symbol by listing squares.
int legendre_bruteforce(i64 a, i64 p) {
  a = mod(a, p);
  if (a == 0) return 0;
  for (i64 x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

}  // namespace

TEST_CASE("gcd and extended gcd") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(-12, 18) == 6);
  CHECK(gcd(0, 7) == 7);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const i64 a = static_cast<i64>(rng() % 100000) - 50000;
    const i64 b = static_cast<i64>(rng() % 100000) - 50000;
    const auto e = ext_gcd(a, b);
    CHECK(e.g == gcd(a, b));
    CHECK(e.u * a + e.v * b == e.g);
  }
}

TEST_CASE("primality agrees with the sieve") {
  const auto ps = primes_up_to(20000);
  std::vector<bool> isp(20001, false);
  for (i64 p : ps) isp[static_cast<std::size_t>(p)] = true;
  for (i64 n = 0; n <= 20000; ++n) CHECK(is_prime(n) == isp[static_cast<std::size_t>(n)]);
  CHECK(is_prime(1'000'000'007));
  CHECK_FALSE(is_prime(1'000'000'007LL * 3));
  SpfSieve sieve(20000);
  for (i64 n = 2; n <= 20000; ++n) CHECK(sieve.is_prime(n) == isp[static_cast<std::size_t>(n)]);
}

TEST_CASE("Kronecker symbol matches Legendre symbol at odd primes") {
  for (i64 p : primes_up_to(200)) {
    if (p == 2) continue;
    for (i64 a = -300; a <= 300; a += 7) CHECK(kronecker(a, p) == legendre_bruteforce(a, p));
  }
}

TEST_CASE("Kronecker symbol at 2 and multiplicativity") {
  // (a/2) for odd a: +1 if a = +-1 mod 8, -1 if a = +-3 mod 8.
  CHECK(kronecker(229, 2) == -1);
  CHECK(kronecker(17, 2) == 1);
  CHECK(kronecker(12, 2) == 0);
  for (i64 m = 1; m < 60; ++m) {
    for (i64 n = 1; n < 60; ++n) CHECK(kronecker(229, m * n) == kronecker(229, m) * kronecker(229, n));
  }
}

TEST_CASE("Tonelli-Shanks square roots") {
  for (i64 p : primes_up_to(500)) {
    for (i64 a = 0; a < p; ++a) {
      if (legendre_bruteforce(a, p) < 0) {
        if (p > 2) CHECK_THROWS_AS(sqrt_mod_prime(a, p), InvalidInput);
        continue;
      }
      const i64 r = sqrt_mod_prime(a, p);
      CHECK(r * r % p == a);
    }
  }
  const i64 big = 1'000'000'009;
  const i64 r = sqrt_mod_prime(4, big);
  CHECK(mul_mod(r, r, big) == 4);
}

TEST_CASE("factorization, totient, divisors") {
  CHECK(euler_phi(229) == 228);
  CHECK(euler_phi(445) == 352);
  CHECK(euler_phi(1) == 1);
  CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
  for (i64 n = 1; n < 3000; ++n) {
    i64 prod = 1;
    for (auto [p, e] : factorize(n)) {
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
    i64 phi = 0;
    for (i64 k = 1; k <= n; ++k) phi += gcd(k, n) == 1;
    if (n < 400) CHECK(phi == euler_phi(n));
  }
  CHECK(is_squarefree(445));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("primitive roots") {
  for (i64 p : primes_up_to(300)) {
    const i64 g = primitive_root(p);
    i64 x = 1;
    int order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    CHECK(order == p - 1);
  }
}

TEST_CASE("integer square root") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(228) == 15);
  CHECK(isqrt(229) == 15);
  CHECK(isqrt(INT64_MAX) == 3037000499);
  CHECK(is_square(225));
  CHECK_FALSE(is_square(229));
}
