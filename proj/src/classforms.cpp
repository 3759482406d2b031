#include "maassforge/classforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maassforge {

namespace {

i64 checked_c(i128 B, i128 A, i64 D) {
  const i128 num = B * B - D;
  if (A == 0 || num % (4 * A) != 0) throw InternalError("form has wrong discriminant");
  return static_cast<i64>(num / (4 * A));
}

}  // namespace

std::string IndefiniteForm::to_string() const {
  return "(" + std::to_string(A) + ", " + std::to_string(B) + ", " + std::to_string(C) + ")";
}

bool is_reduced(const IndefiniteForm& f) {
  const i128 D = static_cast<i128>(f.B) * f.B - static_cast<i128>(4) * f.A * f.C;
  const i128 a2 = 2 * static_cast<i128>(f.A < 0 ? -f.A : f.A);
  const i128 B = f.B;
  if (B <= 0 || B * B >= D) return false;
  if ((a2 + B) * (a2 + B) <= D) return false;
  const i128 diff = a2 - B;
  return diff <= 0 || diff * diff < D;
}

IndefiniteForm rho(const IndefiniteForm& f) {
  const i64 D = f.disc();
  if (D <= 0 || is_square(D)) throw InvalidInput("rho: form is not indefinite with non-square discriminant");
  const i64 s = isqrt(D);
  const i64 c = f.C;
  const i64 ac = c < 0 ? -c : c;
  const i64 m2 = 2 * ac;
  i64 r;
  if (static_cast<i128>(ac) * ac > D) {
    r = mod(-f.B, m2);
    if (r > ac) r -= m2;
  } else {
    r = s - mod(s + f.B, m2);
  }
  return {c, r, checked_c(r, c, D)};
}

IndefiniteForm reduce_form(const IndefiniteForm& f) {
  const i64 D = f.disc();
  if (D <= 0 || is_square(D)) throw InvalidInput("reduce_form: discriminant must be a positive non-square");
  IndefiniteForm g = f;
  // Each step shrinks |A| until reduced; the bound is generous.
  for (int it = 0; it < 100000; ++it) {
    if (is_reduced(g)) return g;
    g = rho(g);
  }
  throw InternalError("reduce_form: no convergence");
}

IndefiniteForm compose_forms(const IndefiniteForm& f, const IndefiniteForm& g) {
  const i64 D = f.disc();
  if (g.disc() != D) throw InvalidInput("compose_forms: discriminants differ");
  if (f.A <= 0 || g.A <= 0) throw InvalidInput("compose_forms: leading coefficients must be positive");
  IndefiniteForm f1 = f;
  IndefiniteForm f2 = g;
  if (f1.A > f2.A) std::swap(f1, f2);
  const i64 s = (f1.B + f2.B) / 2;
  const i64 n = f2.B - s;
  i64 y1;
  i64 d;
  if (f2.A % f1.A == 0) {
    y1 = 0;
    d = f1.A;
  } else {
    const ExtGcd e = ext_gcd(f2.A, f1.A);
    y1 = e.u;
    d = e.g;
  }
  i64 x2;
  i64 y2;
  i64 d1;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    const ExtGcd e = ext_gcd(s, d);
    x2 = e.u;
    y2 = -e.v;
    d1 = e.g;
  }
  const i64 v1 = f1.A / d1;
  const i64 v2 = f2.A / d1;
  const i128 rr = static_cast<i128>(y1) * y2 * n - static_cast<i128>(x2) * f2.C;
  i128 r = rr % v1;
  if (r < 0) r += v1;
  const i128 b3 = f2.B + 2 * static_cast<i128>(v2) * r;
  const i128 a3 = static_cast<i128>(v1) * v2;
  IndefiniteForm h{static_cast<i64>(a3), 0, 0};
  // Normalize b3 modulo 2*a3 before forming c3 to keep numbers small.
  i128 b = b3 % (2 * a3);
  if (b < 0) b += 2 * a3;
  h.B = static_cast<i64>(b);
  h.C = checked_c(b, a3, D);
  return reduce_form(h);
}

IndefiniteForm ideal_to_form(const QuadField& field, const QfIdeal& ideal) {
  const i128 b = ideal.b;
  const i128 nb = b * b + field.t * b + field.n;
  if (nb % ideal.a != 0) throw InvalidInput("ideal_to_form: invalid ideal");
  return {ideal.a, 2 * ideal.b + field.t, static_cast<i64>(nb / ideal.a)};
}

QfIdeal form_to_ideal(const QuadField& field, const IndefiniteForm& f) {
  if (f.A <= 0) throw InvalidInput("form_to_ideal: A must be positive");
  if (f.disc() != field.D) throw InvalidInput("form_to_ideal: discriminant mismatch");
  return make_ideal(field, 1, f.A, (f.B - field.t) / 2);
}

double unit_log(const BigInt& x, const BigInt& y, i64 D) {
  // Scale both numbers so that they convert to double without overflow.
  const std::size_t bits = x > 0 ? boost::multiprecision::msb(x) : 0;
  std::size_t shift = bits > 900 ? bits - 900 : 0;
  const double xs = static_cast<double>(BigInt(x >> shift));
  const double ys = static_cast<double>(BigInt(y >> shift));
  return std::log(xs + ys * std::sqrt(static_cast<double>(D))) - std::log(2.0) +
         static_cast<double>(shift) * std::log(2.0);
}

FundamentalUnit fundamental_unit(const QuadField& field) {
  const i64 D = field.D;
  const i64 s0 = isqrt(D);
  // xi = (s + sqrt D)/2 with s = D mod 2 the largest such value below sqrt D.
  const i64 s = (s0 % 2 == D % 2) ? s0 : s0 - 1;
  i64 P = s;
  i64 Q = 2;
  BigInt p_prev = 1, p_prev2 = 0;
  BigInt q_prev = 0, q_prev2 = 1;
  for (int k = 0; k < 10'000'000; ++k) {
    const i64 a = (P + s0) / Q;
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    const i64 Pn = a * Q - P;
    const i128 num = static_cast<i128>(D) - static_cast<i128>(Pn) * Pn;
    if (num % Q != 0) throw InternalError("fundamental_unit: continued fraction broke");
    const i64 Qn = static_cast<i64>(num / Q);
    P = Pn;
    Q = Qn;
    if (Q == 2) {
      FundamentalUnit u;
      u.period = k + 1;
      u.x = 2 * p - q * s;
      u.y = q;
      u.norm = (u.period % 2 == 0) ? 1 : -1;
      const BigInt lhs = u.x * u.x - BigInt(D) * u.y * u.y;
      if (lhs != 4 * u.norm || u.x <= 0 || u.y <= 0) {
        throw InternalError("fundamental_unit: Pell check failed");
      }
      u.regulator = unit_log(u.x, u.y, D);
      return u;
    }
  }
  throw ResourceLimit("fundamental_unit: period too long");
}

int ClassGroup::power(int c, i64 e) const {
  int r = 0;
  const int o = order(c);
  e = mod(e, o);
  for (i64 i = 0; i < e; ++i) r = compose(r, c);
  return r;
}

int ClassGroup::order(int c) const {
  int r = c;
  int k = 1;
  while (r != 0) {
    r = compose(r, c);
    ++k;
  }
  return k;
}

int ClassGroup::class_of_form(const IndefiniteForm& f) const {
  if (f.disc() != field_.D) throw InvalidInput("class_of_form: discriminant mismatch");
  const auto it = class_of_reduced_.find(reduce_form(f));
  if (it == class_of_reduced_.end()) throw InternalError("class_of_form: reduced form missing from cycles");
  return it->second;
}

int ClassGroup::ideal_to_class(const QfIdeal& ideal) const {
  if (ideal.D != field_.D) throw InvalidInput("ideal_to_class: field mismatch");
  return class_of_form(ideal_to_form(field_, ideal));
}

ClassGroup ClassGroup::build(const QuadField& field, std::size_t form_cap) {
  ClassGroup cg;
  cg.field_ = field;
  cg.unit_ = fundamental_unit(field);
  const i64 D = field.D;
  const i64 s0 = isqrt(D);

  std::vector<IndefiniteForm> reduced;
  for (i64 B = (D % 2 == 0) ? 2 : 1; B <= s0; B += 2) {
    const i64 m = (D - B * B) / 4;
    for (i64 a = 1; a * a <= m; ++a) {
      if (m % a != 0) continue;
      for (i64 aa : {a, m / a}) {
        for (i64 A : {aa, -aa}) {
          IndefiniteForm f{A, B, -m / A};
          if (is_reduced(f)) reduced.push_back(f);
        }
        if (a == m / a) break;
      }
    }
    if (reduced.size() > form_cap) throw ResourceLimit("class group: too many reduced forms");
  }
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

  const i64 b0 = (s0 % 2 == D % 2) ? s0 : s0 - 1;
  const IndefiniteForm principal{1, b0, (b0 * b0 - D) / 4};
  if (!is_reduced(principal)) throw InternalError("principal form not reduced");

  auto walk = [&](const IndefiniteForm& start) {
    std::vector<IndefiniteForm> cyc;
    IndefiniteForm g = start;
    do {
      if (!is_reduced(g)) throw InternalError("rho left the reduced set");
      cyc.push_back(g);
      cg.class_of_reduced_[g] = static_cast<int>(cg.cycles_.size());
      g = rho(g);
      if (cyc.size() > reduced.size()) throw InternalError("cycle does not close");
    } while (g != start);
    const auto rep = std::find_if(cyc.begin(), cyc.end(), [](const IndefiniteForm& x) { return x.A > 0; });
    if (rep == cyc.end()) throw InternalError("cycle without positive leading coefficient");
    cg.reps_.push_back(*rep);
    cg.cycles_.push_back(std::move(cyc));
  };
  walk(principal);
  for (const auto& f : reduced) {
    if (!cg.class_of_reduced_.contains(f)) walk(f);
  }
  if (cg.class_of_reduced_.size() != reduced.size()) throw InternalError("cycles do not partition reduced forms");

  const int h = cg.h_narrow();
  cg.table_.assign(static_cast<std::size_t>(h * h), 0);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) {
      cg.table_[static_cast<std::size_t>(i * h + j)] =
          cg.class_of_form(compose_forms(cg.reps_[static_cast<std::size_t>(i)], cg.reps_[static_cast<std::size_t>(j)]));
    }
  }
  cg.inverse_.assign(static_cast<std::size_t>(h), -1);
  cg.conj_.assign(static_cast<std::size_t>(h), -1);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) {
      if (cg.compose(i, j) == 0) cg.inverse_[static_cast<std::size_t>(i)] = j;
    }
    const auto& r = cg.reps_[static_cast<std::size_t>(i)];
    cg.conj_[static_cast<std::size_t>(i)] = cg.class_of_form({r.A, -r.B, r.C});
  }
  cg.neg_class_ = cg.class_of_form({-1, b0, (D - b0 * b0) / 4});
  if ((cg.neg_class_ == 0) != (cg.unit_.norm == -1)) {
    throw InternalError("class group: unit norm inconsistent with the negative class");
  }
  cg.decompose();
  return cg;
}

void ClassGroup::decompose() {
  const int h = h_narrow();
  std::vector<char> in_sub(static_cast<std::size_t>(h), 0);
  in_sub[0] = 1;
  int sub_size = 1;
  while (sub_size < h) {
    // Order of each element modulo the current subgroup.
    std::vector<int> qord(static_cast<std::size_t>(h), 0);
    int qmax = 0;
    for (int x = 0; x < h; ++x) {
      int r = x;
      int k = 1;
      while (!in_sub[static_cast<std::size_t>(r)]) {
        r = compose(r, x);
        ++k;
      }
      qord[static_cast<std::size_t>(x)] = k;
      qmax = std::max(qmax, k);
    }
    int gen = -1;
    for (int x = 0; x < h && gen < 0; ++x) {
      if (qord[static_cast<std::size_t>(x)] == qmax && order(x) == qmax) gen = x;
    }
    if (gen < 0) throw InternalError("class group decomposition failed");
    generators_.push_back(gen);
    invariants_.push_back(qmax);
    // Enlarge the subgroup by <gen>.
    std::vector<int> members;
    for (int x = 0; x < h; ++x) {
      if (in_sub[static_cast<std::size_t>(x)]) members.push_back(x);
    }
    int g = gen;
    for (int k = 1; k < qmax; ++k) {
      for (int m : members) {
        const int y = compose(m, g);
        if (!in_sub[static_cast<std::size_t>(y)]) {
          in_sub[static_cast<std::size_t>(y)] = 1;
          ++sub_size;
        }
      }
      g = compose(g, gen);
    }
  }

  dlog_.assign(static_cast<std::size_t>(h), {});
  std::vector<int> e(generators_.size(), 0);
  int filled = 0;
  while (true) {
    int c = 0;
    for (std::size_t i = 0; i < e.size(); ++i) c = compose(c, power(generators_[i], e[i]));
    if (!dlog_[static_cast<std::size_t>(c)].empty() || (e.empty() && filled > 0)) {
      throw InternalError("class group decomposition is not direct");
    }
    dlog_[static_cast<std::size_t>(c)] = e;
    ++filled;
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == invariants_[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  if (filled != h) throw InternalError("class group decomposition incomplete");
}

}  // namespace maassforge
