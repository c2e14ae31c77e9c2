#pragma once

// Symmetric forms over Z and Q: exact signature, characteristic vectors,
// the van der Blij and Morita congruences, boundary linking forms of even
// nondegenerate forms, and the mod-8 multiplicativity defect.

#include <cstddef>
#include <string>
#include <vector>

#include "sigmod8/enhancements.hpp"
#include "sigmod8/exact.hpp"

namespace sigmod8 {

class IntSymForm {
 public:
  IntSymForm() = default;
  /// Throws InvalidInput unless square and symmetric.
  explicit IntSymForm(IntMatrix matrix);

  /// (+)_n (Z, [value]).
  static IntSymForm diagonal(std::size_t n, long value);
  static IntSymForm hyperbolic();

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  Integer determinant() const;
  bool is_unimodular() const;
  bool is_even() const;

  IntSymForm negated() const { return IntSymForm(-matrix_); }

  friend bool operator==(const IntSymForm&, const IntSymForm&) = default;

 private:
  IntMatrix matrix_;
};

class RatSymForm {
 public:
  RatSymForm() = default;
  explicit RatSymForm(RatMatrix matrix);
  explicit RatSymForm(const IntSymForm& form) : RatSymForm(to_rational(form.matrix())) {}

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const RatMatrix& matrix() const noexcept { return matrix_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  friend bool operator==(const RatSymForm&, const RatSymForm&) = default;

 private:
  RatMatrix matrix_;
};

IntSymForm direct_sum(const IntSymForm& a, const IntSymForm& b);
IntSymForm tensor_product(const IntSymForm& a, const IntSymForm& b);

/// p - n over Q by congruence diagonalization. Works for any symmetric
/// matrix; the radical counts zero.
long signature_exact(const RatMatrix& m);
long signature_exact(const RatSymForm& form);
inline long signature_exact(const IntSymForm& form) { return signature_exact(to_rational(form.matrix())); }

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const RatMatrix& m);

/// v in {0,1}^n with phi(x,x) = phi(x,v) mod 2; throws NotUnimodular.
IntVector characteristic_vector(const IntSymForm& form);

/// (E/2E, phi mod 2, x -> phi(x,x) mod 4); throws NotUnimodular.
Z4Quadratic reduce_to_enhanced(const IntSymForm& form);

/// phi(v,v) mod 8 for the characteristic vector v.
int van_der_blij_residue(const IntSymForm& form);

/// Finite quadratic linking form on T = (+) Z/d_i. b(x,y) in Q/Z and
/// q(x) in Q/2Z, evaluated from the generator data via
///   q(sum a_i g_i) = sum a_i^2 q_i + 2 sum_{i<j} a_i a_j b_ij.
class LinkingForm {
 public:
  LinkingForm() = default;
  /// Throws InvalidInput on shape errors, non-power-of-2 orders, or
  /// q_i != b_ii mod 1.
  LinkingForm(std::vector<Integer> orders, RatMatrix b, std::vector<Rational> q);

  std::size_t rank() const noexcept { return orders_.size(); }
  const std::vector<Integer>& orders() const noexcept { return orders_; }
  const RatMatrix& b() const noexcept { return b_; }
  const std::vector<Rational>& q() const noexcept { return q_; }
  /// Product of the orders.
  Integer order() const;

  /// Values reduced into [0,1) and [0,2).
  Rational b_value(const std::vector<long>& x, const std::vector<long>& y) const;
  Rational q_value(const std::vector<long>& x) const;

 private:
  std::vector<Integer> orders_;
  RatMatrix b_;
  std::vector<Rational> q_;
};

LinkingForm direct_sum(const LinkingForm& a, const LinkingForm& b);

/// Boundary of a nondegenerate even form whose determinant is +- a power
/// of 2: T = coker(form), b = form^{-1} mod Z, q = form^{-1}(x,x) mod 2Z.
LinkingForm boundary_linking_form(const IntSymForm& form);

inline constexpr unsigned kLinkingMaxLog2Order = 20;
inline constexpr double kGaussSnapTolerance = 1e-6;

/// BK from sum_x e^{pi i q(x)} = sqrt|T| e^{2 pi i k / 8}, snapped to the
/// nearest admissible value within kGaussSnapTolerance (relative).
int bk_linking(const LinkingForm& lf);

struct DefectReport {
  long sigma_e = 0;
  long sigma_b = 0;
  long sigma_f = 0;
  long defect = 0;  // sigma_e - sigma_b * sigma_f
  int bk = 0;       // BK of the reduced E'' = e (+) -(b (x) f)
  int arf = 0;      // Arf of its Wu subquotient
};

/// Arf invariant measuring sigma(e) - sigma(b) sigma(f) = 4 Arf mod 8.
/// Throws NotUnimodular or NotMod4Multiplicative.
DefectReport multiplicativity_defect(const IntSymForm& e, const IntSymForm& b, const IntSymForm& f);

}  // namespace sigmod8
