#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "maassforge/quadfield.hpp"

using namespace maassforge;

namespace {

// Every sublattice k(aZ + (b+w)Z) of norm n that is closed under
// multiplication by w, found by scanning all triples.
std::vector<std::tuple<i64, i64, i64>> brute_ideals(const QuadField& F, i64 n) {
  std::vector<std::tuple<i64, i64, i64>> out;
  for (i64 k = 1; k * k <= n; ++k) {
    if (n % (k * k) != 0) continue;
    const i64 a = n / (k * k);
    for (i64 b = 0; b < a; ++b) {
      // w * a and w * (b + w) = -n_w + (b + t) w must lie in aZ + (b+w)Z.
      const i64 c0 = -F.n - b * (b + F.t);  // w(b+w) - (b+t)(b+w), constant part
      const bool ok = (mod(-a * b, a) == 0) && (mod(c0, a) == 0);
      if (ok) out.emplace_back(a, b, k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Membership of x + y w in the ideal I.
bool contains(const QfIdeal& I, i128 x, i128 y) {
  if (y % I.k != 0 || x % I.k != 0) return false;
  const i128 v = y / I.k;
  const i128 u = x / I.k - v * I.b;
  return u % I.a == 0;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK_NOTHROW(QuadField::make(229));
  CHECK_NOTHROW(QuadField::make(40));
  CHECK_NOTHROW(QuadField::make(12));
  CHECK_NOTHROW(QuadField::make(5));
  CHECK_THROWS_AS(QuadField::make(4), InvalidInput);
  CHECK_THROWS_AS(QuadField::make(20), InvalidInput);
  CHECK_THROWS_AS(QuadField::make(9), InvalidInput);
  CHECK_THROWS_AS(QuadField::make(-3), InvalidInput);
  CHECK_THROWS_AS(QuadField::make(7), InvalidInput);
  const auto F = QuadField::make(229);
  CHECK(F.omega_half);
  CHECK(F.t == 1);
  CHECK(F.n == -57);
  CHECK(F.sqrtD * F.sqrtD == doctest::Approx(229.0).epsilon(1e-15));
  const auto G = QuadField::make(40);
  CHECK(G.t == 0);
  CHECK(G.n == -10);
}

TEST_CASE("chi_D values and properties") {
  const auto F = QuadField::make(229);
  CHECK(kronecker_chi_D(F, 229) == 0);
  CHECK(kronecker_chi_D(F, 2) == -1);
  CHECK(kronecker_chi_D(F, 3) == 1);
  CHECK(kronecker_chi_D(F, 0) == 0);
  for (i64 D : {5, 12, 40, 229, 401, 445}) {
    const auto K = QuadField::make(D);
    for (i64 n = 1; n < 500; ++n) {
      CHECK(kronecker_chi_D(K, n) == kronecker_chi_D(K, n + D));
      for (i64 m = 1; m < 30; ++m) CHECK(kronecker_chi_D(K, m * n) == kronecker_chi_D(K, m) * kronecker_chi_D(K, n));
    }
  }
}

TEST_CASE("splitting of small primes in Q(sqrt 229)") {
  const auto F = QuadField::make(229);
  const auto s3 = split_prime(F, 3);
  CHECK(s3.kind == SplitKind::Split);
  REQUIRE(s3.primes_above.size() == 2);
  CHECK(s3.primes_above[0] != s3.primes_above[1]);
  CHECK(ideal_conj(F, s3.primes_above[0]) == s3.primes_above[1]);
  for (const auto& P : s3.primes_above) CHECK(P.norm == 3);
  const auto bf3 = brute_ideals(F, 3);
  CHECK(bf3.size() == 2);

  const auto s2 = split_prime(F, 2);
  CHECK(s2.kind == SplitKind::Inert);
  CHECK(s2.primes_above.empty());
  CHECK(brute_ideals(F, 2).empty());

  const auto s229 = split_prime(F, 229);
  CHECK(s229.kind == SplitKind::Ramified);
  REQUIRE(s229.primes_above.size() == 1);
  CHECK(s229.primes_above[0].norm == 229);
  CHECK_THROWS_AS(split_prime(F, 9), InvalidInput);
}

TEST_CASE("prime decompositions multiply back to pO") {
  for (i64 D : {5, 8, 12, 40, 229, 401, 445}) {
    const auto F = QuadField::make(D);
    for (i64 p : primes_up_to(300)) {
      const auto s = split_prime(F, p);
      CHECK((s.kind == SplitKind::Split) == (kronecker_chi_D(F, p) == 1));
      CHECK((s.kind == SplitKind::Ramified) == (kronecker_chi_D(F, p) == 0));
      QfIdeal prod = unit_ideal(F);
      if (s.kind == SplitKind::Split) prod = ideal_mul(F, s.primes_above[0], s.primes_above[1]);
      if (s.kind == SplitKind::Ramified) prod = ideal_mul(F, s.primes_above[0], s.primes_above[0]);
      if (s.kind != SplitKind::Inert) CHECK(prod == rational_ideal(F, p));
    }
  }
}

TEST_CASE("ideal_mul examples") {
  const auto F = QuadField::make(229);
  const auto s3 = split_prime(F, 3);
  const auto p3 = s3.primes_above[0];
  const auto p3c = s3.primes_above[1];
  CHECK(ideal_mul(F, unit_ideal(F), p3) == p3);
  CHECK(ideal_mul(F, p3, p3c) == rational_ideal(F, 3));
  CHECK(ideal_mul(F, p3, p3).norm == 9);
  const auto G = QuadField::make(5);
  CHECK_THROWS_AS(ideal_mul(F, p3, unit_ideal(G)), InvalidInput);
}

TEST_CASE("ideal_mul against lattice containment on random pairs") {
  std::mt19937_64 rng(7);
  for (i64 D : {229, 445, 40}) {
    const auto F = QuadField::make(D);
    const auto all = enumerate_ideals(F, 300);
    std::vector<QfIdeal> flat;
    for (const auto& g : all) flat.insert(flat.end(), g.ideals.begin(), g.ideals.end());
    for (int trial = 0; trial < 1000; ++trial) {
      const auto& x = flat[rng() % flat.size()];
      const auto& y = flat[rng() % flat.size()];
      const auto z = ideal_mul(F, x, y);
      CHECK(z.norm == x.norm * y.norm);
      CHECK(z == ideal_mul(F, y, x));
      // The product lattice contains every product of generators; equal norms
      // then force equality of lattices.
      const i128 gx[2][2] = {{static_cast<i128>(x.k) * x.a, 0}, {static_cast<i128>(x.k) * x.b, x.k}};
      const i128 gy[2][2] = {{static_cast<i128>(y.k) * y.a, 0}, {static_cast<i128>(y.k) * y.b, y.k}};
      for (const auto& u : gx) {
        for (const auto& v : gy) {
          const i128 px = u[0] * v[0] - u[1] * v[1] * F.n;
          const i128 py = u[0] * v[1] + u[1] * v[0] + u[1] * v[1] * F.t;
          CHECK(contains(z, px, py));
        }
      }
    }
  }
}

TEST_CASE("enumerate_ideals small cases") {
  const auto F = QuadField::make(229);
  const auto one = enumerate_ideals(F, 1);
  REQUIRE(one.size() == 1);
  REQUIRE(one[0].ideals.size() == 1);
  CHECK(one[0].ideals[0] == unit_ideal(F));
  const auto four = enumerate_ideals(F, 4);
  CHECK(four[1].ideals.empty());
  REQUIRE(four[3].ideals.size() == 1);
  CHECK(four[3].ideals[0] == rational_ideal(F, 2));
  CHECK(enumerate_ideals(F, 3)[2].ideals.size() == 2);
  CHECK_THROWS_AS(enumerate_ideals(F, 0), InvalidInput);
  CHECK_THROWS_AS(enumerate_ideals(F, 1000, 100), ResourceLimit);
}

TEST_CASE("enumerate_ideals agrees with brute force and the divisor sum") {
  for (i64 D : {5, 8, 12, 40, 229, 401, 445}) {
    const auto F = QuadField::make(D);
    const auto all = enumerate_ideals(F, 200);
    for (const auto& g : all) {
      std::vector<std::tuple<i64, i64, i64>> got;
      for (const auto& I : g.ideals) {
        CHECK(I.norm == g.norm);
        got.emplace_back(I.a, I.b, I.k);
      }
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(got == brute_ideals(F, g.norm));
      CHECK(static_cast<i64>(g.ideals.size()) == ideal_count(F, g.norm));
    }
  }
}

TEST_CASE("enumerated ideals are closed under conjugation") {
  for (i64 D : {229, 445, 40}) {
    const auto F = QuadField::make(D);
    for (const auto& g : enumerate_ideals(F, 2000)) {
      std::set<QfIdeal> s(g.ideals.begin(), g.ideals.end());
      CHECK(s.size() == g.ideals.size());
      for (const auto& I : g.ideals) CHECK(s.contains(ideal_conj(F, I)));
    }
  }
}
