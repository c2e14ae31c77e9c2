#pragma once

// Symplectic monodromy of surface bundles over surfaces and their signature
// via Wall non-additivity, one pair of pants per handle.
//
// J = [[0, I], [-I, 0]] and phi(x, y) = x^T J y throughout.

#include <cstddef>
#include <vector>

#include "sigmod8/exact.hpp"
#include "sigmod8/intforms.hpp"

namespace sigmod8 {

IntMatrix standard_j(std::size_t genus);

/// M^T J M = J. Throws OddDimension for non-square or odd-sized input.
bool is_symplectic(const IntMatrix& m);

class SymplecticMatrix {
 public:
  SymplecticMatrix() = default;
  /// Throws OddDimension or NotSymplectic.
  explicit SymplecticMatrix(IntMatrix m);

  static SymplecticMatrix identity(std::size_t genus);

  std::size_t genus() const noexcept { return m_.rows() / 2; }
  const IntMatrix& matrix() const noexcept { return m_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// -J M^T J.
  SymplecticMatrix inverse() const;
  SymplecticMatrix operator-() const;

  /// Every entry of M - I divisible by `modulus`.
  bool is_trivial_mod(long modulus) const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);
  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  struct Unchecked {};
  SymplecticMatrix(IntMatrix m, Unchecked) : m_(std::move(m)) {}
  IntMatrix m_;
};

/// x -> x + phi(c, x) c. Throws ZeroVector or OddDimension.
SymplecticMatrix transvection(const IntVector& c);

/// f g f^-1 g^-1.
SymplecticMatrix commutator(const SymplecticMatrix& f, const SymplecticMatrix& g);

struct MonodromyPair {
  SymplecticMatrix f;
  SymplecticMatrix g;
};

class MonodromyData {
 public:
  /// Throws InvalidInput on genus mismatch and CommutatorRelationViolated
  /// unless prod [f_i, g_i] = I.
  MonodromyData(std::size_t fibre_genus, std::vector<MonodromyPair> pairs);

  static MonodromyData identity(std::size_t fibre_genus, std::size_t base_genus);

  std::size_t fibre_genus() const noexcept { return h_; }
  std::size_t base_genus() const noexcept { return pairs_.size(); }
  const std::vector<MonodromyPair>& pairs() const noexcept { return pairs_; }

 private:
  std::size_t h_;
  std::vector<MonodromyPair> pairs_;
};

/// prod [f_i, g_i], for diagnostics on data that fails the relation.
IntMatrix commutator_product(std::size_t fibre_genus, const std::vector<MonodromyPair>& pairs);

/// S(f, g) = J (I - g^-1)(I - f)^-1 (g - f). Throws OneMinusFSingular.
RatSymForm wall_form_closed(const SymplecticMatrix& f, const SymplecticMatrix& g);

struct WallForm {
  std::vector<RatVector> kernel;  // basis of ker[(I-f) | (I-g)]
  RatMatrix psi;                  // Gram matrix of Psi on that basis
  long signature = 0;
};

/// Psi((y,z),(y',z')) = phi(y + z, (I - f) y') on ker[(I-f) | (I-g)].
WallForm wall_form_general(const SymplecticMatrix& f, const SymplecticMatrix& g);

/// sigma(Psi(f, g f^-1 g^-1)), the Wall signature of one handle.
long handle_wall_signature(const SymplecticMatrix& f, const SymplecticMatrix& g);

/// -sigma(Psi(f^-1, g f^-1 g^-1)), the handle term used for the bundle.
long handle_signature(const SymplecticMatrix& f, const SymplecticMatrix& g);

struct BundleReport {
  std::vector<long> handles;       // handle_signature per pair
  std::vector<long> wall_handles;  // handle_wall_signature per pair
  long total = 0;
  long wall_total = 0;
};

/// Handles are evaluated concurrently when `parallel`; sums run in pair order.
BundleReport bundle_report(const MonodromyData& m, bool parallel = true);
long bundle_signature(const MonodromyData& m, bool parallel = true);

/// Every f_i, g_i congruent to I mod 4 (resp. mod 2).
bool z4_trivial_check(const MonodromyData& m);
bool z2_trivial_check(const MonodromyData& m);

}  // namespace sigmod8
