#include "hopfchrom/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::column(const Field& field, std::span<const Scalar> v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::row(const Field& field, std::span<const Scalar> v) {
  Matrix m(field, 1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::column_vector(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const { return hopfchrom::is_zero(data_); }

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) {
    throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                            std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
  }
  if (!(field_ == other.field_)) throw FieldError("matrix product over different fields");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar* out_row = out.data_.data() + i * other.cols_;
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      const Scalar* b_row = other.data_.data() + k * other.cols_;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (!b_row[j].is_zero()) out_row[j].add_product(a, b_row[j]);
      }
    }
  }
  return out;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector product: size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) out[i].add_product(a, v[k]);
    }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix out = *this;
  out += other;
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  Matrix out = *this;
  out += other.scaled(-field_.one());
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw DimensionMismatch("vstack: column count mismatch");
  Matrix out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw DimensionMismatch("hstack: row count mismatch");
  Matrix out(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("first_difference: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return EntryDiff{i, j};
  return std::nullopt;
}

RrefResult rref(const Matrix& a) {
  Matrix r = a;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < r.cols() && lead_row < r.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(pivot, j), r(lead_row, j));
    const Scalar scale = r(lead_row, col).inv();
    for (std::size_t j = col; j < r.cols(); ++j)
      if (!r(lead_row, j).is_zero()) r(lead_row, j) *= scale;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead_row || r(i, col).is_zero()) continue;
      const Scalar factor = -r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        if (!r(lead_row, j).is_zero()) r(i, j).add_product(factor, r(lead_row, j));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

Matrix nullspace(const Matrix& a) {
  const auto [r, rk, pivots] = rref(a);
  const Field& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(f, a.cols(), free);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(f, a.cols(), basis);
}

Vector solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
  const Matrix augmented = a.hstack(Matrix::column(a.field(), b));
  const auto [r, rk, pivots] = rref(augmented);
  if (!pivots.empty() && pivots.back() == a.cols()) throw NoSolution();
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, a.cols());
  return x;
}

Matrix invert(const Matrix& a) {
  if (a.rows() != a.cols()) throw SingularMatrix("cannot invert a non-square matrix");
  const std::size_t n = a.rows();
  const auto [r, rk, pivots] = rref(a.hstack(Matrix::identity(a.field(), n)));
  if (n > 0 && (rk < n || pivots[n - 1] != n - 1)) throw SingularMatrix("matrix is singular");
  return r.block(0, n, n, n);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldError("kron over different fields");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    }
  return out;
}

Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& m) {
  const std::size_t ca = a.cols(), cb = b.cols(), ra = a.rows(), rb = b.rows(), k = m.cols();
  if (m.rows() != ca * cb) throw DimensionMismatch("kron_apply: input has wrong row count");
  // Step 1: (I_ca (x) B) M, treating each ca-block of rows separately.
  Matrix mid(m.field(), ca * rb, k);
  for (std::size_t i = 0; i < ca; ++i)
    for (std::size_t r = 0; r < rb; ++r)
      for (std::size_t j = 0; j < cb; ++j) {
        const Scalar& x = b(r, j);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < k; ++c) {
          const Scalar& y = m(i * cb + j, c);
          if (!y.is_zero()) mid(i * rb + r, c).add_product(x, y);
        }
      }
  // Step 2: (A (x) I_rb) mid.
  Matrix out(m.field(), ra * rb, k);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < rb; ++r)
        for (std::size_t c = 0; c < k; ++c) {
          const Scalar& y = mid(j * rb + r, c);
          if (!y.is_zero()) out(i * rb + r, c).add_product(x, y);
        }
    }
  return out;
}

Matrix column_space(const Matrix& a) {
  const auto pivots = rref(a).pivots;
  std::vector<Vector> cols;
  for (auto p : pivots) cols.push_back(a.column_vector(p));
  return Matrix::from_columns(a.field(), a.rows(), cols);
}

bool same_column_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(a.hstack(b));
}

}  // namespace hopfchrom
