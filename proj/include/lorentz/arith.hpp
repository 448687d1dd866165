#pragma once

// Exact integer/rational scalars, vectors and dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorentz {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

/// Base class for every mathematical precondition/consistency failure raised
/// by the library. The CLI maps these to exit status 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Row-major dense matrix. Used with Integer and Rational entries only.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const std::vector<T>> cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<T> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// ---- conversions and small helpers ----------------------------------------

RatVec to_rational(std::span<const Integer> v);
RatMatrix to_rational(const IntMatrix& m);
IntVec make_intvec(std::initializer_list<long> values);
RatVec make_ratvec(std::initializer_list<long> values);

/// Integer vector when every entry has denominator one, throws otherwise.
IntVec to_integer(std::span<const Rational> v);
IntMatrix to_integer(const RatMatrix& m);
bool is_integral(std::span<const Rational> v);
bool is_integral(const RatMatrix& m);

Integer gcd_of(std::span<const Integer> v);
bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);
bool is_primitive(std::span<const Integer> v);
/// Divides by the gcd of the coordinates. Zero maps to zero.
IntVec primitive_part(std::span<const Integer> v);
/// Clears denominators and divides by the content: the primitive integer
/// vector on the same ray (same direction, positive multiple).
IntVec primitive_on_ray(std::span<const Rational> v);

Integer sum(std::span<const Integer> v);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
IntVec add(std::span<const Integer> a, std::span<const Integer> b);
IntVec sub(std::span<const Integer> a, std::span<const Integer> b);
IntVec scale(std::span<const Integer> a, const Integer& k);
IntVec negate(std::span<const Integer> a);
RatVec add(std::span<const Rational> a, std::span<const Rational> b);
RatVec scale(std::span<const Rational> a, const Rational& k);

/// Floor of the square root of a nonnegative rational.
Integer floor_sqrt(const Rational& r);
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
/// Whether r is the square of a rational; stores the root when it is.
bool rational_sqrt(const Rational& r, Rational& root);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
std::string to_string(std::span<const Integer> v);
std::string to_string(std::span<const Rational> v);
/// Parses "p" or "p/q"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace lorentz
