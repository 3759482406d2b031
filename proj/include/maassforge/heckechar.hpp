#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "maassforge/classforms.hpp"
#include "maassforge/cyclotomic.hpp"

namespace maassforge {

/// Type (eps, eps, nu/i, -nu/i); nu = i * nu_im.
struct InfinityType {
  int epsilon = 0;
  double nu_im = 0.0;
};

/// Unramified Hecke character of F factoring through the narrow class
/// group. Values are exact: psi(class c) = zeta_e^{value_index(c)} with e
/// the exponent of the class group.
class HeckeCharacter {
 public:
  /// Character number `index` in the mixed-radix enumeration over the
  /// cyclic factors of the narrow class group. Throws InvalidInput when the
  /// index is out of range, nu != 0, or the sign on the class of
  /// negative-norm principal ideals disagrees with epsilon.
  static HeckeCharacter make_class_character(std::shared_ptr<const ClassGroup> cg, int index,
                                             InfinityType infinity = {});
  /// Infinity type forced by the character's value on the negative class.
  static int natural_epsilon(const ClassGroup& cg, int index);

  const ClassGroup& class_group() const { return *cg_; }
  std::shared_ptr<const ClassGroup> class_group_ptr() const { return cg_; }
  const QuadField& field() const { return cg_->field(); }
  int index() const { return index_; }
  InfinityType infinity() const { return inf_; }
  int exponent() const { return cg_->exponent(); }
  int order() const;
  /// Norm of the conductor; always 1 here.
  i64 conductor_norm() const { return 1; }

  int value_index(int cls) const { return values_[static_cast<std::size_t>(cls)]; }
  int eval_index(const QfIdeal& ideal) const { return value_index(cg_->ideal_to_class(ideal)); }
  std::complex<double> eval(const QfIdeal& ideal) const { return root_of_unity(eval_index(ideal), exponent()); }
  CyclotomicInt eval_exact(const QfIdeal& ideal) const { return CyclotomicInt::root(eval_index(ideal), exponent()); }
  const std::vector<int>& values() const { return values_; }

  bool is_trivial() const;
  /// psi = psi o sigma, i.e. psi factors through the norm to Q.
  bool is_norm_induced() const;

  HeckeCharacter conjugate() const;
  HeckeCharacter power(int k) const;
  HeckeCharacter operator*(const HeckeCharacter& o) const;
  /// psi (psi-bar o sigma).
  HeckeCharacter product_with_conjugate_sigma() const;

  /// Root number of the completed L-function; 1 for unramified characters.
  std::complex<double> root_number() const;

 private:
  std::shared_ptr<const ClassGroup> cg_;
  int index_ = 0;
  InfinityType inf_;
  std::vector<int> values_;

  static std::vector<int> digits(const ClassGroup& cg, int index);
  static int from_digits(const ClassGroup& cg, const std::vector<int>& d);
  static std::vector<int> values_for(const ClassGroup& cg, int index);
};

/// Dirichlet character given by exact root-of-unity indices; idx[x] = -1
/// when gcd(x, m) > 1.
struct DirichletCharacter {
  i64 m = 1;
  int e = 1;
  std::vector<int> idx;

  static DirichletCharacter trivial(i64 m);
  /// chi(g^j) = zeta_{p-1}^{k j} with g the least primitive root mod p.
  static DirichletCharacter from_prime(i64 p, int k);
  /// Kronecker symbol (D/.) as a character mod |D|.
  static DirichletCharacter kronecker_symbol(i64 D);

  std::complex<double> operator()(i64 x) const;
  int index_at(i64 x) const { return idx[static_cast<std::size_t>(mod(x, m))]; }
  bool is_primitive() const;
  bool is_trivial() const;
  /// Parity: chi(-1) = (-1)^parity.
  int parity() const;
  DirichletCharacter operator*(const DirichletCharacter& o) const;
};

struct GaussSumResult {
  std::complex<double> value;
  i64 modulus_norm = 1;
};

/// sum_x chi(x) e^{2 pi i x/m}.
GaussSumResult gauss_sum_rational(const DirichletCharacter& chi);

/// Gauss sum over F for the modulus m O_F, with base point a = m sqrt D:
/// (-1)^eps sum_{u, v mod m} chi(u + v omega) e^{2 pi i v/m}. The callback
/// returns 0 on non-units.
using ResidueCharacter = std::function<std::complex<double>(i64 u, i64 v)>;
GaussSumResult gauss_sum_quadratic_field(const QuadField& field, i64 m, const ResidueCharacter& chi_fin,
                                         int epsilon = 0);

struct GaussRelationResidual {
  std::complex<double> tau_F;
  std::complex<double> via_square;   // sigma(D) chi_D(p) tau_Q(sigma)^2
  std::complex<double> via_product;  // D^{-1/2} tau_Q(sigma) tau_Q(sigma chi_D)
  double residual = 0.0;             // max of both differences
};

/// tau_F(sigma o N) against its two rational expressions. Requires p inert
/// in F and sigma a primitive character mod p.
GaussRelationResidual check_gauss_relation(const QuadField& field, i64 p, const DirichletCharacter& sigma);

}  // namespace maassforge
