#pragma once

// Linear algebra over Z2 on word-packed bit vectors, and the structure
// theory of nonsingular symmetric bilinear forms over Z2.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigmod8 {

class Z2Vec {
 public:
  Z2Vec() = default;
  explicit Z2Vec(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

  static Z2Vec unit(std::size_t dim, std::size_t i);
  static Z2Vec from_bits(std::span<const int> bits);
  /// Low `dim` bits of `mask`; requires dim <= 64.
  static Z2Vec from_mask(std::size_t dim, std::uint64_t mask);

  std::size_t dim() const noexcept { return dim_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;
  /// Index of the lowest set bit, or dim() if zero.
  std::size_t lowest() const noexcept;
  /// Bits packed into one word; requires dim <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  Z2Vec& operator^=(const Z2Vec& o);
  friend Z2Vec operator^(Z2Vec a, const Z2Vec& b) { return a ^= b; }
  /// Standard dot product sum x_i y_i mod 2.
  bool dot(const Z2Vec& o) const;
  /// Number of positions where both vectors are 1.
  std::size_t and_popcount(const Z2Vec& o) const;

  std::string str() const;  // "(1,0,1)"

  friend bool operator==(const Z2Vec&, const Z2Vec&) = default;
  friend std::strong_ordering operator<=>(const Z2Vec& a, const Z2Vec& b);

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Rank of the span of `rows`.
std::size_t z2_rank(std::vector<Z2Vec> rows);
/// Some x with rows[i].dot(x) = rhs[i] for all i, if one exists.
std::optional<Z2Vec> z2_solve(const std::vector<Z2Vec>& rows, const Z2Vec& rhs);
/// Basis of {x : rows[i].dot(x) = 0 for all i} in ambient dimension `dim`.
std::vector<Z2Vec> z2_kernel(const std::vector<Z2Vec>& rows, std::size_t dim);

/// Subspace of Z2^n stored by its reduced row-echelon basis, so equal
/// subspaces compare equal structurally.
class Z2Subspace {
 public:
  explicit Z2Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  Z2Subspace(std::size_t ambient_dim, std::vector<Z2Vec> generators);

  static Z2Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Z2Vec>& basis() const noexcept { return basis_; }
  bool contains(const Z2Vec& x) const;

  friend bool operator==(const Z2Subspace&, const Z2Subspace&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Z2Vec> basis_;
};

/// Symmetric bilinear form over Z2 given by its Gram matrix.
class Z2SymForm {
 public:
  Z2SymForm() = default;
  /// Throws InvalidInput unless the rows form a square symmetric matrix.
  explicit Z2SymForm(std::vector<Z2Vec> rows);
  static Z2SymForm from_matrix(const std::vector<std::vector<int>>& m);

  /// P = (Z2, [1]) and H = [[0,1],[1,0]].
  static Z2SymForm P();
  static Z2SymForm H();

  std::size_t dim() const noexcept { return rows_.size(); }
  bool operator()(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  const std::vector<Z2Vec>& rows() const noexcept { return rows_; }

  /// Gram matrix times x.
  Z2Vec apply(const Z2Vec& x) const;
  /// lambda(x, y).
  bool pair(const Z2Vec& x, const Z2Vec& y) const { return x.dot(apply(y)); }
  Z2Vec diagonal() const;
  bool is_isotropic() const { return diagonal().is_zero(); }

  /// Gram matrix of the form restricted to span(basis), in that basis.
  Z2SymForm restrict_to(const std::vector<Z2Vec>& basis) const;

  friend bool operator==(const Z2SymForm&, const Z2SymForm&) = default;

 private:
  std::vector<Z2Vec> rows_;
};

Z2SymForm direct_sum(const Z2SymForm& a, const Z2SymForm& b);
Z2SymForm direct_sum_power(const Z2SymForm& a, std::size_t copies);

bool is_nonsingular(const Z2SymForm& form);

/// The unique v with lambda(x,x) = lambda(x,v); throws SingularForm.
Z2Vec wu_class(const Z2SymForm& form);

struct Z2Decomposition {
  std::size_t p = 0;  // copies of P
  std::size_t k = 0;  // copies of H
  friend bool operator==(const Z2Decomposition&, const Z2Decomposition&) = default;
};

/// form ~ (+)_p P (+) (+)_k H. Splits anisotropic vectors first (lowest
/// index), then hyperbolic pairs from the isotropic remainder.
Z2Decomposition decompose(const Z2SymForm& form);

struct SymplecticPair {
  Z2Vec e;
  Z2Vec ebar;
};

/// Pairs with lambda(e_i, ebar_j) = delta_ij and all other pairings zero,
/// spanning `subspace`. Throws AnisotropicInput or DegenerateRestriction.
std::vector<SymplecticPair> symplectic_split(const Z2SymForm& form, const Z2Subspace& subspace);

/// Class in L^0(Z2) = Z2.
int witt_class_sym(const Z2SymForm& form);

}  // namespace sigmod8
