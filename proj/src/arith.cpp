#include "maassforge/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace maassforge {

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 mod(i64 a, i64 m) {
  if (m < 0) m = -m;
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<i128>(mod(a, m)) * mod(b, m)) % m);
}

i64 pow_mod(i64 base, u64 exp, i64 m) {
  if (m == 1) return 0;
  i64 result = 1;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

i64 inv_mod(i64 a, i64 m) {
  auto [g, u, v] = ext_gcd(mod(a, m), m);
  (void)v;
  if (g != 1) throw InvalidInput("inv_mod: not invertible");
  return mod(u, m);
}

i64 isqrt(i64 n) {
  if (n < 0) throw InvalidInput("isqrt of negative number");
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller–Rabin for 64-bit inputs.
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = pow_mod(a, static_cast<u64>(d), n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_squarefree(i64 n) {
  for (const auto& pp : factorize(n)) {
    if (pp.e > 1) return false;
  }
  return true;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  if (v > 0) {
    if ((a & 1) == 0) return 0;
    if ((v & 1) == 1) {
      i64 a8 = mod(a, 8);
      if (a8 == 3 || a8 == 5) result = -result;
    }
  }
  // Jacobi symbol (a/n) for odd n > 0.
  a = mod(a, n);
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      i64 n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

i64 sqrt_mod_prime(i64 a, i64 p) {
  a = mod(a, p);
  if (p == 2) return a;
  if (a == 0) return 0;
  if (pow_mod(a, static_cast<u64>((p - 1) / 2), p) != 1) {
    throw InvalidInput("sqrt_mod_prime: not a quadratic residue");
  }
  if (p % 4 == 3) return pow_mod(a, static_cast<u64>((p + 1) / 4), p);

  i64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  i64 z = 2;
  while (pow_mod(z, static_cast<u64>((p - 1) / 2), p) != p - 1) ++z;

  i64 m = s;
  i64 c = pow_mod(z, static_cast<u64>(q), p);
  i64 t = pow_mod(a, static_cast<u64>(q), p);
  i64 r = pow_mod(a, static_cast<u64>((q + 1) / 2), p);
  while (t != 1) {
    i64 i = 0;
    i64 tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
      if (i == m) throw InternalError("Tonelli–Shanks failed to converge");
    }
    i64 b = c;
    for (i64 j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

std::vector<PrimePower> factorize(i64 n) {
  if (n <= 0) throw InvalidInput("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

i64 euler_phi(i64 n) {
  i64 phi = n;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    phi = phi / p * (p - 1);
  }
  return phi;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t prev = out.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < prev; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 primitive_root(i64 p) {
  if (!is_prime(p)) throw InvalidInput("primitive_root: modulus must be prime");
  if (p == 2) return 1;
  const auto fac = factorize(p - 1);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : fac) {
      (void)e;
      if (pow_mod(g, static_cast<u64>((p - 1) / q), p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("primitive_root: none found");
}

std::vector<i64> primes_up_to(i64 n) {
  std::vector<i64> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
  for (i64 i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

SpfSieve::SpfSieve(i64 n) : spf_(static_cast<std::size_t>(std::max<i64>(n, 1) + 1), 0) {
  if (n > (i64{1} << 31) - 1) throw ResourceLimit("SpfSieve: limit too large");
  for (i64 i = 2; i <= n; ++i) {
    if (spf_[static_cast<std::size_t>(i)] != 0) continue;
    for (i64 j = i; j <= n; j += i) {
      if (spf_[static_cast<std::size_t>(j)] == 0) spf_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
  }
}

std::vector<PrimePower> SpfSieve::factorize(i64 k) const {
  std::vector<PrimePower> out;
  while (k > 1) {
    i64 p = spf(k);
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

}  // namespace maassforge
