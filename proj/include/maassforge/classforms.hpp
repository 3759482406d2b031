#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "maassforge/quadfield.hpp"

namespace maassforge {

using BigInt = boost::multiprecision::cpp_int;

/// Binary quadratic form A x^2 + B xy + C y^2.
struct IndefiniteForm {
  i64 A = 0;
  i64 B = 0;
  i64 C = 0;

  i64 disc() const { return B * B - 4 * A * C; }
  auto operator<=>(const IndefiniteForm&) const = default;
  std::string to_string() const;
};

bool is_reduced(const IndefiniteForm& f);
/// One reduction step (C, r, (r^2 - D)/4C); preserves proper equivalence.
IndefiniteForm rho(const IndefiniteForm& f);
/// Applies rho until the form is reduced.
IndefiniteForm reduce_form(const IndefiniteForm& f);
/// Gauss composition followed by reduction. Both forms need A > 0.
IndefiniteForm compose_forms(const IndefiniteForm& f, const IndefiniteForm& g);
/// Form attached to an ideal k[a, b + omega]: (a, 2b + t, N(b + omega)/a).
IndefiniteForm ideal_to_form(const QuadField& field, const QfIdeal& ideal);
/// Ideal [A, (B - t)/2 + omega] for a form with A > 0.
QfIdeal form_to_ideal(const QuadField& field, const IndefiniteForm& f);

/// epsilon = (x + y sqrt D)/2 > 1, the fundamental unit.
struct FundamentalUnit {
  BigInt x;
  BigInt y;
  int norm = 1;
  double regulator = 0.0;
  int period = 0;  // continued-fraction period length
};

/// Exact continued-fraction computation of the fundamental unit.
FundamentalUnit fundamental_unit(const QuadField& field);

/// log((x + y sqrt D)/2) for large x, y.
double unit_log(const BigInt& x, const BigInt& y, i64 D);

/// Narrow class group built from cycles of reduced forms.
/// Class 0 is the principal class.
class ClassGroup {
 public:
  static ClassGroup build(const QuadField& field, std::size_t form_cap = 2'000'000);

  const QuadField& field() const { return field_; }
  int h_narrow() const { return static_cast<int>(cycles_.size()); }
  int h_wide() const { return h_narrow() / (neg_class_ == 0 ? 1 : 2); }
  int unit_norm() const { return unit_.norm; }
  const FundamentalUnit& unit() const { return unit_; }
  const std::vector<std::vector<IndefiniteForm>>& cycles() const { return cycles_; }
  std::size_t reduced_form_count() const { return class_of_reduced_.size(); }

  int compose(int c1, int c2) const { return table_[static_cast<std::size_t>(c1 * h_narrow() + c2)]; }
  int inverse(int c) const { return inverse_[static_cast<std::size_t>(c)]; }
  /// Class of the Galois-conjugate ideals.
  int conj(int c) const { return conj_[static_cast<std::size_t>(c)]; }
  int power(int c, i64 e) const;
  int order(int c) const;
  /// Narrow class of principal ideals with a generator of negative norm;
  /// trivial iff the fundamental unit has norm -1.
  int neg_class() const { return neg_class_; }

  int class_of_form(const IndefiniteForm& f) const;
  int ideal_to_class(const QfIdeal& ideal) const;
  /// Form with A > 0 representing class c.
  const IndefiniteForm& representative(int c) const { return reps_[static_cast<std::size_t>(c)]; }
  QfIdeal representative_ideal(int c) const { return form_to_ideal(field_, representative(c)); }

  /// Cyclic decomposition: generators g_i of orders m_i with m_{i+1} | m_i.
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& invariants() const { return invariants_; }
  int exponent() const { return invariants_.empty() ? 1 : invariants_.front(); }
  /// Exponents e_i with c = prod g_i^{e_i}, 0 <= e_i < m_i.
  const std::vector<int>& dlog(int c) const { return dlog_[static_cast<std::size_t>(c)]; }

 private:
  QuadField field_;
  FundamentalUnit unit_;
  std::vector<std::vector<IndefiniteForm>> cycles_;
  std::vector<IndefiniteForm> reps_;
  std::map<IndefiniteForm, int> class_of_reduced_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> conj_;
  int neg_class_ = 0;
  std::vector<int> generators_;
  std::vector<int> invariants_;
  std::vector<std::vector<int>> dlog_;

  void decompose();
};

}  // namespace maassforge
