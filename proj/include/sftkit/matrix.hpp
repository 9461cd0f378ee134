#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sftkit {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Dense row-major matrix over an exact ring (mpz_class or mpq_class).
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows);
  static Matrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const;
  std::vector<T> col(std::size_t j) const;
  std::vector<std::vector<T>> to_rows() const;

  Matrix transpose() const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  // "[[a,b],[c,d]]"
  std::string to_string() const;

  const std::vector<T>& data() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> scale(const Matrix<T>& a, const T& c);

// Row vector times matrix.
template <class T>
std::vector<T> operator*(const std::vector<T>& v, const Matrix<T>& a);
template <>
IntVector operator*(const IntVector& v, const IntMatrix& a);
// Matrix times column vector.
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v);
template <>
IntVector operator*(const IntMatrix& a, const IntVector& v);

IntMatrix power(const IntMatrix& a, unsigned long n);
RatMatrix power(const RatMatrix& a, unsigned long n);

bool is_nonnegative(const IntMatrix& a);
Int max_entry(const IntMatrix& a);
Int trace(const IntMatrix& a);

// Fraction-free Bareiss elimination.
Int determinant(const IntMatrix& a);

RatMatrix to_rational(const IntMatrix& a);
RatVector to_rational(const IntVector& v);
// Throws std::domain_error when the matrix is singular.
RatMatrix inverse(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);

// Unique solution x of x * B = v when the rows of B are independent; nullopt when v is outside
// the row space.  Throws std::invalid_argument on dependent rows.
struct RowCoordinates {
  bool in_span = false;
  RatVector coords;
};
RowCoordinates row_coordinates(const RatMatrix& basis_rows, const RatVector& v);

IntMatrix permutation_matrix(const std::vector<std::size_t>& perm);
// P A P^{-1} with P sending basis vector i to perm[i]; entry (perm[i], perm[j]) = a(i, j).
IntMatrix permute(const IntMatrix& a, const std::vector<std::size_t>& perm);

bool is_integral(const RatVector& v);
std::string vector_to_string(const IntVector& v);
std::string vector_to_string(const RatVector& v);

IntVector ones(std::size_t n);

}  // namespace sftkit
