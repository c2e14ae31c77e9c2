#pragma once

// Z2- and Z4-valued quadratic enhancements of symmetric forms over Z2,
// their Arf and Brown-Kervaire invariants, and the Wu-sublagrangian
// subquotient on which BK = 4 Arf.

#include <cstdint>
#include <span>
#include <vector>

#include "sigmod8/z2forms.hpp"

namespace sigmod8 {

/// h : V -> Z2 with h(x+y) = h(x) + h(y) + lambda(x,y) over an isotropic form.
class Z2Quadratic {
 public:
  /// Throws InvalidInput if the form has a nonzero diagonal.
  Z2Quadratic(Z2SymForm form, std::vector<int> basis_values);
  /// Accepts a full value table indexed by the bit mask of x (dim <= 10);
  /// throws InvalidInput unless the table satisfies the quadratic law.
  static Z2Quadratic from_table(Z2SymForm form, std::span<const int> table);

  /// h^{a,b} on H.
  static Z2Quadratic hyperbolic(int a, int b);

  const Z2SymForm& form() const noexcept { return form_; }
  std::size_t dim() const noexcept { return form_.dim(); }
  const std::vector<int>& basis_values() const noexcept { return values_; }

  int operator()(const Z2Vec& x) const;

 private:
  Z2SymForm form_;
  std::vector<int> values_;
};

/// q : V -> Z4 with q(x+y) = q(x) + q(y) + 2 lambda(x,y), q(x) = lambda(x,x) mod 2.
class Z4Quadratic {
 public:
  /// Throws InvalidInput unless q(e_i) = lambda(e_i,e_i) mod 2.
  Z4Quadratic(Z2SymForm form, std::vector<int> basis_values);
  static Z4Quadratic from_table(Z2SymForm form, std::span<const int> table);

  /// q^{a,b} on H (a, b in {0, 2}).
  static Z4Quadratic hyperbolic(int a, int b);
  /// P_1 = (Z2, 1, q = 1), P_{-1} = (Z2, 1, q = 3).
  static Z4Quadratic P(int sign);

  const Z2SymForm& form() const noexcept { return form_; }
  std::size_t dim() const noexcept { return form_.dim(); }
  const std::vector<int>& basis_values() const noexcept { return values_; }

  int operator()(const Z2Vec& x) const;

 private:
  Z2SymForm form_;
  std::vector<int> values_;
};

Z2Quadratic direct_sum(const Z2Quadratic& a, const Z2Quadratic& b);
Z4Quadratic direct_sum(const Z4Quadratic& a, const Z4Quadratic& b);
Z4Quadratic direct_sum_power(const Z4Quadratic& a, std::size_t copies);

/// Witt class in L<v1>^0(Z2) = Z8.
struct WittClassZ8 {
  int value = 0;  // in [0, 8)
  friend bool operator==(WittClassZ8, WittClassZ8) = default;
  friend WittClassZ8 operator+(WittClassZ8 a, WittClassZ8 b) { return {(a.value + b.value) % 8}; }
};

int arf(const Z2Quadratic& h);

inline constexpr std::size_t kGaussSumMaxDim = 24;

/// BK from the Gauss sum sum_x i^{q(x)} evaluated exactly.
int bk_gauss(const Z4Quadratic& q);
/// Same, from a raw table of 2^dim values in Z4 (index = bit mask of x).
/// Throws NoGaussMatch if the sum is not (sqrt 2)^dim times an 8th root of unity.
int bk_gauss_table(std::size_t dim, std::span<const std::uint8_t> table);

struct BkClassification {
  std::size_t m = 0;        // q^{0,0}
  std::size_t n = 0;        // q^{2,2}
  std::size_t p_plus = 0;   // P_1
  std::size_t p_minus = 0;  // P_{-1}

  int bk() const noexcept;  // 4n + p+ - p- mod 8
  friend bool operator==(const BkClassification&, const BkClassification&) = default;
};
BkClassification bk_classify(const Z4Quadratic& q);

inline WittClassZ8 witt_class(const Z4Quadratic& q) { return {bk_gauss(q)}; }

/// q = 2h.
Z4Quadratic double_enhancement(const Z2Quadratic& h);

struct DifferenceVector {
  Z2Vec t;
  int bk_shift = 0;  // 2 q(t) mod 8, equal to BK(q) - BK(q')
};
/// The unique t with q'(x) - q(x) = 2 lambda(x,t).
DifferenceVector difference_vector(const Z4Quadratic& q, const Z4Quadratic& q_prime);

/// L = <v> for the Wu class v; throws NotDivisibleBy4 unless q(v) = 0.
Z2Subspace wu_sublagrangian(const Z4Quadratic& q);

struct Subquotient {
  Z2Quadratic quadratic;     // (W, mu, h)
  std::vector<Z2Vec> lifts;  // representatives in V of the basis of W
};
/// (L^perp / L, [lambda], [q]/2).
Subquotient isotropic_subquotient(const Z4Quadratic& q);

}  // namespace sigmod8
