#include "maassforge/heckechar.hpp"

#include <cmath>
#include <numeric>

namespace maassforge {

std::vector<int> HeckeCharacter::digits(const ClassGroup& cg, int index) {
  std::vector<int> d;
  for (int m : cg.invariants()) {
    d.push_back(index % m);
    index /= m;
  }
  return d;
}

int HeckeCharacter::from_digits(const ClassGroup& cg, const std::vector<int>& d) {
  int index = 0;
  int radix = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int m = cg.invariants()[i];
    index += static_cast<int>(mod(d[i], m)) * radix;
    radix *= m;
  }
  return index;
}

std::vector<int> HeckeCharacter::values_for(const ClassGroup& cg, int index) {
  const int E = cg.exponent();
  const auto d = digits(cg, index);
  std::vector<int> v(static_cast<std::size_t>(cg.h_narrow()), 0);
  for (int c = 0; c < cg.h_narrow(); ++c) {
    const auto& e = cg.dlog(c);
    i64 s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<i64>(d[i]) * e[i] * (E / cg.invariants()[i]);
    v[static_cast<std::size_t>(c)] = static_cast<int>(mod(s, E));
  }
  return v;
}

int HeckeCharacter::natural_epsilon(const ClassGroup& cg, int index) {
  if (index < 0 || index >= cg.h_narrow()) throw InvalidInput("character index out of range");
  const int v = values_for(cg, index)[static_cast<std::size_t>(cg.neg_class())];
  if (v == 0) return 0;
  if (2 * v == cg.exponent()) return 1;
  throw InternalError("character value on the negative class is not +-1");
}

HeckeCharacter HeckeCharacter::make_class_character(std::shared_ptr<const ClassGroup> cg, int index,
                                                    InfinityType infinity) {
  if (!cg) throw InvalidInput("make_class_character: null class group");
  if (index < 0 || index >= cg->h_narrow()) {
    throw InvalidInput("character index " + std::to_string(index) + " out of range [0, " +
                       std::to_string(cg->h_narrow()) + ")");
  }
  if (infinity.epsilon != 0 && infinity.epsilon != 1) throw InvalidInput("epsilon must be 0 or 1");
  if (infinity.nu_im != 0.0) throw InvalidInput("class characters have nu = 0");
  if (natural_epsilon(*cg, index) != infinity.epsilon) {
    throw InvalidInput("infinity type inconsistent with the character on negative-norm principal ideals");
  }
  HeckeCharacter psi;
  psi.cg_ = std::move(cg);
  psi.index_ = index;
  psi.inf_ = infinity;
  psi.values_ = values_for(*psi.cg_, index);
  return psi;
}

int HeckeCharacter::order() const {
  const int E = exponent();
  int o = 1;
  for (int v : values_) o = std::lcm(o, E / std::gcd(E, v == 0 ? E : v));
  return o;
}

bool HeckeCharacter::is_trivial() const { return index_ == 0; }

bool HeckeCharacter::is_norm_induced() const {
  for (int g : cg_->generators()) {
    if (value_index(g) != value_index(cg_->conj(g))) return false;
  }
  return true;
}

HeckeCharacter HeckeCharacter::power(int k) const {
  auto d = digits(*cg_, index_);
  for (auto& x : d) x *= k;
  const int idx = from_digits(*cg_, d);
  return make_class_character(cg_, idx, {natural_epsilon(*cg_, idx), 0.0});
}

HeckeCharacter HeckeCharacter::conjugate() const { return power(-1); }

HeckeCharacter HeckeCharacter::operator*(const HeckeCharacter& o) const {
  if (o.cg_ != cg_ && o.field().D != field().D) throw InvalidInput("character product: field mismatch");
  auto d = digits(*cg_, index_);
  const auto e = digits(*cg_, o.index_);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += e[i];
  const int idx = from_digits(*cg_, d);
  return make_class_character(cg_, idx, {natural_epsilon(*cg_, idx), 0.0});
}

HeckeCharacter HeckeCharacter::product_with_conjugate_sigma() const {
  const int E = exponent();
  std::vector<int> want(values_.size());
  for (int c = 0; c < cg_->h_narrow(); ++c) {
    want[static_cast<std::size_t>(c)] = static_cast<int>(mod(value_index(c) - value_index(cg_->conj(c)), E));
  }
  for (int idx = 0; idx < cg_->h_narrow(); ++idx) {
    if (values_for(*cg_, idx) == want) return make_class_character(cg_, idx, {natural_epsilon(*cg_, idx), 0.0});
  }
  throw InternalError("psi(psi-bar o sigma) is not a class character");
}

std::complex<double> HeckeCharacter::root_number() const {
  // tau_F = psi_inf(sqrt D) = (-1)^eps for the unit conductor.
  const std::complex<double> tau = inf_.epsilon ? -1.0 : 1.0;
  const std::complex<double> i_pow = inf_.epsilon ? std::complex<double>(-1.0, 0.0) : 1.0;  // i^{-2 eps}
  return i_pow * tau / std::sqrt(static_cast<double>(conductor_norm()));
}

DirichletCharacter DirichletCharacter::trivial(i64 m) {
  if (m < 1) throw InvalidInput("Dirichlet modulus must be positive");
  DirichletCharacter chi;
  chi.m = m;
  chi.e = 1;
  chi.idx.assign(static_cast<std::size_t>(m), 0);
  for (i64 x = 0; x < m; ++x) {
    if (gcd(x, m) != 1) chi.idx[static_cast<std::size_t>(x)] = -1;
  }
  return chi;
}

DirichletCharacter DirichletCharacter::from_prime(i64 p, int k) {
  if (!is_prime(p)) throw InvalidInput("from_prime: modulus must be prime");
  DirichletCharacter chi = trivial(p);
  chi.e = static_cast<int>(p - 1);
  const i64 g = primitive_root(p);
  i64 x = 1;
  for (i64 j = 0; j < p - 1; ++j) {
    chi.idx[static_cast<std::size_t>(x)] = static_cast<int>(mod(static_cast<i64>(k) * j, p - 1));
    x = x * g % p;
  }
  return chi;
}

DirichletCharacter DirichletCharacter::kronecker_symbol(i64 D) {
  const i64 m = D < 0 ? -D : D;
  DirichletCharacter chi = trivial(m);
  chi.e = 2;
  for (i64 x = 0; x < m; ++x) {
    const int k = kronecker(D, x);
    chi.idx[static_cast<std::size_t>(x)] = k == 1 ? 0 : (k == -1 ? 1 : -1);
  }
  return chi;
}

std::complex<double> DirichletCharacter::operator()(i64 x) const {
  const int k = index_at(x);
  return k < 0 ? std::complex<double>(0.0) : root_of_unity(k, e);
}

bool DirichletCharacter::is_trivial() const {
  for (int v : idx) {
    if (v > 0) return false;
  }
  return true;
}

bool DirichletCharacter::is_primitive() const {
  for (i64 d : divisors(m)) {
    if (d == m) continue;
    bool induced = true;
    for (i64 x = 1; x < m && induced; x += d) {
      const int v = idx[static_cast<std::size_t>(x)];
      if (v > 0) induced = false;
    }
    if (induced) return false;
  }
  return true;
}

int DirichletCharacter::parity() const {
  const int v = index_at(-1);
  if (v == 0) return 0;
  if (2 * v == e) return 1;
  throw InternalError("chi(-1) is not +-1");
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
  DirichletCharacter r;
  r.m = std::lcm(m, o.m);
  r.e = std::lcm(e, o.e);
  r.idx.assign(static_cast<std::size_t>(r.m), -1);
  for (i64 x = 0; x < r.m; ++x) {
    const int a = index_at(x);
    const int b = o.index_at(x);
    if (a < 0 || b < 0) continue;
    r.idx[static_cast<std::size_t>(x)] = static_cast<int>(mod(static_cast<i64>(a) * (r.e / e) + static_cast<i64>(b) * (r.e / o.e), r.e));
  }
  return r;
}

GaussSumResult gauss_sum_rational(const DirichletCharacter& chi) {
  std::complex<double> s = 0.0;
  for (i64 x = 0; x < chi.m; ++x) {
    const int k = chi.index_at(x);
    if (k < 0) continue;
    // chi(x) e(x/m) as a single root of unity of order lcm(e, m).
    const i64 L = std::lcm(static_cast<i64>(chi.e), chi.m);
    s += root_of_unity(static_cast<i64>(k) * (L / chi.e) + x * (L / chi.m), L);
  }
  return {s, chi.m};
}

GaussSumResult gauss_sum_quadratic_field(const QuadField& field, i64 m, const ResidueCharacter& chi_fin,
                                         int epsilon) {
  if (m < 1) throw InvalidInput("gauss_sum_quadratic_field: m must be positive");
  (void)field;
  std::complex<double> s = 0.0;
  for (i64 v = 0; v < m; ++v) {
    std::complex<double> inner = 0.0;
    for (i64 u = 0; u < m; ++u) inner += chi_fin(u, v);
    s += inner * root_of_unity(v, m);
  }
  if (epsilon) s = -s;
  return {s, m * m};
}

GaussRelationResidual check_gauss_relation(const QuadField& field, i64 p, const DirichletCharacter& sigma) {
  if (!is_prime(p)) throw InvalidInput("check_gauss_relation: p must be prime");
  if (kronecker_chi_D(field, p) != -1) throw InvalidInput("check_gauss_relation: p must be inert");
  if (sigma.m != p || sigma.is_trivial() || !sigma.is_primitive()) {
    throw InvalidInput("check_gauss_relation: sigma must be a primitive character mod p");
  }
  const auto chi = [&](i64 u, i64 v) {
    const i64 nrm = mod(u * u + field.t * u * v + field.n * v * v, p);
    return sigma(nrm);
  };
  GaussRelationResidual r;
  r.tau_F = gauss_sum_quadratic_field(field, p, chi, sigma.parity()).value;
  const auto tq = gauss_sum_rational(sigma).value;
  r.via_square = sigma(field.D) * static_cast<double>(kronecker_chi_D(field, p)) * tq * tq;
  const auto twisted = sigma * DirichletCharacter::kronecker_symbol(field.D);
  r.via_product = tq * gauss_sum_rational(twisted).value / std::sqrt(static_cast<double>(field.D));
  r.residual = std::max(std::abs(r.tau_F - r.via_square), std::abs(r.tau_F - r.via_product));
  return r;
}

}  // namespace maassforge
