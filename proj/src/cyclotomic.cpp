#include "maassforge/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace maassforge {

namespace {

std::vector<i64> poly_div_exact(std::vector<i64> num, const std::vector<i64>& den) {
  // den monic; returns quotient, throws if the remainder is nonzero.
  const std::size_t dn = den.size() - 1;
  std::vector<i64> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const i64 c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw InternalError("cyclotomic: inexact division");
  }
  return q;
}

const std::vector<i64>& phi_cached(int m, std::map<int, std::vector<i64>>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  // x^m - 1 = prod_{d | m} Phi_d(x).
  std::vector<i64> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_div_exact(p, phi_cached(d, cache));
  }
  return cache[m] = p;
}

}  // namespace

const std::vector<i64>& cyclotomic_polynomial(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<i64>> cache;
  if (m < 1) throw InvalidInput("cyclotomic_polynomial: m must be positive");
  std::lock_guard<std::mutex> lock(mu);
  return phi_cached(m, cache);
}

std::complex<double> root_of_unity(i64 k, i64 e) {
  k = mod(k, e);
  const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(e);
  // Exact values at the quarter turns.
  if (4 * k == e) return {0.0, 1.0};
  if (2 * k == e) return {-1.0, 0.0};
  if (4 * k == 3 * e) return {0.0, -1.0};
  if (k == 0) return {1.0, 0.0};
  return {std::cos(ang), std::sin(ang)};
}

CyclotomicInt::CyclotomicInt(int e) : c_(static_cast<std::size_t>(e), 0) {
  if (e < 1) throw InvalidInput("CyclotomicInt: order must be positive");
}

CyclotomicInt CyclotomicInt::root(int k, int e) {
  CyclotomicInt z(e);
  z.add_root(k);
  return z;
}

CyclotomicInt CyclotomicInt::integer(i64 v, int e) {
  CyclotomicInt z(e);
  z.c_[0] = v;
  return z;
}

void CyclotomicInt::add_root(int k, i64 mult) { c_[static_cast<std::size_t>(mod(k, order()))] += mult; }

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  if (o.order() != order()) throw InvalidInput("CyclotomicInt: order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  if (o.order() != order()) throw InvalidInput("CyclotomicInt: order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  CyclotomicInt r = *this;
  r += o;
  return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  CyclotomicInt r = *this;
  r -= o;
  return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  if (o.order() != order()) throw InvalidInput("CyclotomicInt: order mismatch");
  const int e = order();
  CyclotomicInt r(e);
  for (int i = 0; i < e; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < e; ++j) {
      r.c_[static_cast<std::size_t>((i + j) % e)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

CyclotomicInt CyclotomicInt::operator*(i64 s) const {
  CyclotomicInt r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

CyclotomicInt CyclotomicInt::conj() const {
  const int e = order();
  CyclotomicInt r(e);
  for (int j = 0; j < e; ++j) r.c_[static_cast<std::size_t>((e - j) % e)] = c_[static_cast<std::size_t>(j)];
  return r;
}

std::vector<i64> CyclotomicInt::reduced() const {
  const auto& phi = cyclotomic_polynomial(order());
  const std::size_t deg = phi.size() - 1;
  std::vector<i64> r = c_;
  for (std::size_t i = r.size(); i-- > deg;) {
    const i64 c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

bool CyclotomicInt::is_zero() const {
  for (i64 v : reduced()) {
    if (v != 0) return false;
  }
  return true;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const { return (*this - o).is_zero(); }

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> s = 0.0;
  for (int j = 0; j < order(); ++j) {
    if (c_[static_cast<std::size_t>(j)] != 0) s += static_cast<double>(c_[static_cast<std::size_t>(j)]) * root_of_unity(j, order());
  }
  return s;
}

}  // namespace maassforge
