#pragma once

// Dense matrices over Z and Q with exact GMP arithmetic. Sizes here are
// small (tens of rows), so everything is plain row-major storage.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace sigmod8 {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator-(const Matrix<T>& a);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x);

/// x^T M y.
template <class T>
T bilinear(const Matrix<T>& m, const std::vector<T>& x, const std::vector<T>& y);

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b);

RatMatrix to_rational(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Integer inverse of a matrix with det = +-1; nullopt otherwise.
std::optional<IntMatrix> inverse_unimodular(const IntMatrix& m);

/// Basis of {x : m x = 0} over Q, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// U * m * V = diag(d_1, ..., d_r, 0, ...) with d_i | d_{i+1}, d_i > 0 and
/// U, V unimodular.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  std::vector<Integer> diagonal;  // length min(rows, cols)
};
SmithForm smith_normal_form(const IntMatrix& m);

/// Floor-style residue in [0, modulus).
long mod_nonneg(const Integer& x, long modulus);
/// Representative of x in Q/nZ lying in [0, n).
Rational reduce_mod(const Rational& x, long n);

std::string to_string(const Rational& x);
/// Inline form "[[a,b],[c,d]]".
std::string to_string(const IntMatrix& m);

// ---------------------------------------------------------------------------

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    for (const auto& x : row) data_.push_back(x);
    for (std::size_t k = row.size(); k < cols_; ++k) data_.push_back(T(0));
  }
  data_.resize(rows_ * cols_);
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
bool Matrix<T>::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

template <class T>
bool Matrix<T>::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a) {
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

template <class T>
T bilinear(const Matrix<T>& m, const std::vector<T>& x, const std::vector<T>& y) {
  T acc = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    T row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

}  // namespace sigmod8
