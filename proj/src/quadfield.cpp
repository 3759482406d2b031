#include "maassforge/quadfield.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace maassforge {

namespace {

struct Vec2 {
  i128 x;  // coefficient of 1
  i128 y;  // coefficient of omega
};

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 mod128(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

// Product of x1 + y1 w and x2 + y2 w using w^2 = t w - n.
Vec2 mul_elem(const QuadField& f, Vec2 u, Vec2 v) {
  return {u.x * v.x - u.y * v.y * f.n, u.x * v.y + u.y * v.x + u.y * v.y * f.t};
}

// Hermite normal form {(alpha,0), (beta,gamma)} of the lattice spanned by vs.
std::array<i128, 3> hnf(std::vector<Vec2> vs) {
  // Row-reduce on the omega coordinate.
  Vec2 pivot{0, 0};
  for (auto& v : vs) {
    while (v.y != 0) {
      if (pivot.y == 0) {
        std::swap(pivot, v);
        break;
      }
      i128 q = v.y / pivot.y;
      v.x -= q * pivot.x;
      v.y -= q * pivot.y;
      if (v.y != 0) std::swap(pivot, v);
    }
  }
  i128 alpha = 0;
  for (const auto& v : vs) alpha = gcd128(alpha, v.x);
  if (pivot.y < 0) {
    pivot.x = -pivot.x;
    pivot.y = -pivot.y;
  }
  if (alpha == 0 || pivot.y == 0) throw InternalError("hnf: degenerate lattice");
  return {alpha, mod128(pivot.x, alpha), pivot.y};
}

}  // namespace

bool QuadField::is_fundamental(i64 D) {
  if (D <= 1 || is_square(D)) return false;
  if (D % 4 == 1) return is_squarefree(D);
  if (D % 4 != 0) return false;
  const i64 m = D / 4;
  return (m % 4 == 2 || m % 4 == 3) && is_squarefree(m);
}

QuadField QuadField::make(i64 D) {
  if (D > (i64{1} << 40)) throw InvalidInput("discriminant too large: " + std::to_string(D));
  if (!is_fundamental(D)) {
    throw InvalidInput("not a positive fundamental discriminant: " + std::to_string(D));
  }
  QuadField f;
  f.D = D;
  f.omega_half = (D % 4 == 1);
  f.t = f.omega_half ? 1 : 0;
  f.n = f.omega_half ? (1 - D) / 4 : -D / 4;
  f.sqrtD = std::sqrt(static_cast<double>(D));
  return f;
}

double QuadField::omega() const { return omega_half ? (1.0 + sqrtD) / 2.0 : sqrtD / 2.0; }
double QuadField::omega_conj() const { return omega_half ? (1.0 - sqrtD) / 2.0 : -sqrtD / 2.0; }

std::string QfIdeal::to_string() const {
  return std::to_string(k) + "*[" + std::to_string(a) + ", " + std::to_string(b) + "+w]";
}

const char* to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::Split:
      return "split";
    case SplitKind::Inert:
      return "inert";
    case SplitKind::Ramified:
      return "ramified";
  }
  return "?";
}

int kronecker_chi_D(const QuadField& field, i64 n) { return kronecker(field.D, n); }

QfIdeal unit_ideal(const QuadField& field) { return QfIdeal{field.D, 1, 1, 0, 1}; }

QfIdeal rational_ideal(const QuadField& field, i64 m) {
  if (m < 1) throw InvalidInput("rational_ideal: m must be positive");
  return QfIdeal{field.D, m, 1, 0, m * m};
}

bool is_valid_ideal(const QuadField& field, i64 a, i64 b) {
  if (a < 1) return false;
  const i128 nb = static_cast<i128>(b) * b + static_cast<i128>(field.t) * b + field.n;
  return nb % a == 0;
}

QfIdeal make_ideal(const QuadField& field, i64 k, i64 a, i64 b) {
  if (k < 1 || a < 1) throw InvalidInput("make_ideal: k and a must be positive");
  b = mod(b, a);
  if (!is_valid_ideal(field, a, b)) throw InvalidInput("make_ideal: lattice is not an ideal");
  const i128 norm = static_cast<i128>(k) * k * a;
  if (norm > static_cast<i128>(INT64_MAX)) throw ResourceLimit("ideal norm overflows 64 bits");
  return QfIdeal{field.D, k, a, b, static_cast<i64>(norm)};
}

QfIdeal ideal_conj(const QuadField& field, const QfIdeal& x) {
  QfIdeal r = x;
  r.b = mod(-x.b - field.t, x.a);
  return r;
}

QfIdeal ideal_mul(const QuadField& field, const QfIdeal& x, const QfIdeal& y) {
  if (x.D != field.D || y.D != field.D) throw InvalidInput("ideal_mul: field mismatch");
  const std::array<Vec2, 2> bx{Vec2{x.a, 0}, Vec2{x.b, 1}};
  const std::array<Vec2, 2> by{Vec2{y.a, 0}, Vec2{y.b, 1}};
  std::vector<Vec2> gens;
  gens.reserve(4);
  for (const auto& u : bx) {
    for (const auto& v : by) gens.push_back(mul_elem(field, u, v));
  }
  const auto [alpha, beta, gamma] = hnf(std::move(gens));
  if (alpha % gamma != 0 || beta % gamma != 0) throw InternalError("ideal_mul: product is not an ideal");
  const i128 k = gamma * x.k * y.k;
  const i128 a = alpha / gamma;
  const i128 b = mod128(beta / gamma, a);
  const i128 norm = k * k * a;
  if (norm > static_cast<i128>(INT64_MAX)) throw ResourceLimit("ideal norm overflows 64 bits");
  QfIdeal r{field.D, static_cast<i64>(k), static_cast<i64>(a), static_cast<i64>(b), static_cast<i64>(norm)};
  if (r.norm != x.norm * y.norm) throw InternalError("ideal_mul: norm not multiplicative");
  return r;
}

QfIdeal ideal_pow(const QuadField& field, const QfIdeal& x, int e) {
  QfIdeal r = unit_ideal(field);
  for (int i = 0; i < e; ++i) r = ideal_mul(field, r, x);
  return r;
}

PrimeSplit split_prime(const QuadField& field, i64 p) {
  if (!is_prime(p)) throw InvalidInput("split_prime: not prime: " + std::to_string(p));
  PrimeSplit ps;
  ps.p = p;
  const int chi = kronecker_chi_D(field, p);
  if (chi == -1) {
    ps.kind = SplitKind::Inert;
    return ps;
  }
  // Roots of x^2 + t x + n mod p give the ideals (p, r + omega).
  std::vector<i64> roots;
  if (p == 2) {
    for (i64 r = 0; r < 2; ++r) {
      if (is_valid_ideal(field, 2, r)) roots.push_back(r);
    }
  } else {
    // x = (-t +- s)/2 with s^2 = t^2 - 4n = D.
    const i64 s = sqrt_mod_prime(mod(field.D, p), p);
    const i64 inv2 = (p + 1) / 2;
    for (i64 sg : {s, mod(-s, p)}) {
      const i64 r = mul_mod(mod(sg - field.t, p), inv2, p);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  for (i64 r : roots) {
    if (!is_valid_ideal(field, p, r)) throw InternalError("split_prime: modular root check failed");
    ps.primes_above.push_back(make_ideal(field, 1, p, r));
  }
  const std::size_t expect = chi == 1 ? 2 : 1;
  if (ps.primes_above.size() != expect) throw InternalError("split_prime: wrong number of primes above p");
  ps.kind = chi == 1 ? SplitKind::Split : SplitKind::Ramified;
  return ps;
}

std::vector<IdealsByNorm> enumerate_ideals(const QuadField& field, i64 max_norm, i64 cap) {
  if (max_norm < 1) throw InvalidInput("enumerate_ideals: max_norm must be >= 1");
  if (max_norm > (i64{1} << 31)) throw ResourceLimit("enumerate_ideals: max_norm too large");
  std::vector<std::vector<QfIdeal>> lists(static_cast<std::size_t>(max_norm + 1));
  lists[1].push_back(unit_ideal(field));
  i64 total = 1;

  for (i64 p : primes_up_to(max_norm)) {
    const PrimeSplit ps = split_prime(field, p);
    std::vector<QfIdeal> primes = ps.primes_above;
    if (ps.kind == SplitKind::Inert) {
      if (p > max_norm / p) continue;
      primes.push_back(rational_ideal(field, p));
    }
    for (const QfIdeal& P : primes) {
      const i64 q = P.norm;
      // Ascending n so that list[n] already holds all multiples by P.
      for (i64 n = 1; n <= max_norm / q; ++n) {
        auto& src = lists[static_cast<std::size_t>(n)];
        auto& dst = lists[static_cast<std::size_t>(n * q)];
        const std::size_t cnt = src.size();
        for (std::size_t i = 0; i < cnt; ++i) {
          dst.push_back(ideal_mul(field, src[i], P));
          if (++total > cap) throw ResourceLimit("enumerate_ideals: ideal count exceeds cap");
        }
      }
    }
  }

  std::vector<IdealsByNorm> out;
  out.reserve(static_cast<std::size_t>(max_norm));
  for (i64 n = 1; n <= max_norm; ++n) {
    auto& v = lists[static_cast<std::size_t>(n)];
    std::sort(v.begin(), v.end());
    out.push_back({n, std::move(v)});
  }
  return out;
}

i64 ideal_count(const QuadField& field, i64 n) {
  i64 c = 0;
  for (i64 d : divisors(n)) c += kronecker_chi_D(field, d);
  return c;
}

}  // namespace maassforge
