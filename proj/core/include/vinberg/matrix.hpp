#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "vinberg/scalar.hpp"

namespace vinberg {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  /// Elementary matrix E_{row,col} of the given shape.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col);
  static Matrix diagonal(std::span<const Scalar> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> entries() const { return entries_; }

  Scalar trace() const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;
  Vector column(std::size_t c) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Exact product. Throws DimensionError when a.cols() != b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Commutator ab - ba of two square matrices of equal size.
Matrix bracket(const Matrix& a, const Matrix& b);

/// tr(ab) without forming the product.
Scalar trace_of_product(const Matrix& a, const Matrix& b);

/// Row-major flattening.
Vector flatten(const Matrix& a);

/// Matrix whose columns are the given equal-length vectors.
Matrix from_columns(std::span<const Vector> columns, std::size_t length);

/// Reduced row echelon form together with the pivot column of each
/// nonzero row.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix a);

std::size_t rank(const Matrix& a);

/// Exact basis of the null space {x : a x = 0}; its size is cols - rank.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Some solution of a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace vinberg
