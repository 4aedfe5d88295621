#pragma once

// Dense exact linear algebra over a Field.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfchrom/field.hpp"

namespace hopfchrom {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
/// The i-th standard basis vector of length n.
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix column(const Field& field, std::span<const Scalar> v);
  static Matrix row(const Field& field, std::span<const Scalar> v);
  /// Columns given as equal-length vectors; `rows` is used when `cols` is empty.
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column_vector(std::size_t j) const;
  const std::vector<Scalar>& entries() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& other) const;
  Vector operator*(std::span<const Scalar> v) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Scalar& s) const;
  Matrix& operator+=(const Matrix& other);

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Stacks `below` under this matrix (same column count).
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// First entry (row-major) where two equally shaped matrices differ.
struct EntryDiff {
  std::size_t row;
  std::size_t col;
};
std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the pivot in each column is the first nonzero entry.
RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Basis of {v : A v = 0} as columns, one per free column of rref(A), with the
/// free variable set to 1 and the other free variables to 0.
Matrix nullspace(const Matrix& a);

/// The solution of A x = b with all free variables zero. Throws NoSolution.
Vector solve(const Matrix& a, std::span<const Scalar> b);

/// Throws SingularMatrix for non-invertible (or non-square) input.
Matrix invert(const Matrix& a);

/// Kronecker product; entry ((i*rb + k), (j*cb + l)) = A(i,j) * B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// kron(A, B) * M computed without forming the Kronecker product.
Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& m);

/// Column space basis: the pivot columns of A.
Matrix column_space(const Matrix& a);

/// True iff span(columns of a) == span(columns of b).
bool same_column_span(const Matrix& a, const Matrix& b);

}  // namespace hopfchrom
