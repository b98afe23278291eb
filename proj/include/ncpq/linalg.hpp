#pragma once

// Dense exact linear algebra over the rationals. Everything here is small
// (matrices of a few hundred entries at most), so a plain row-major vector of
// mpq_class is used with straightforward Gauss-Jordan elimination.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ncpq {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_integers(std::size_t rows, std::size_t cols, std::span<const std::int64_t> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  bool operator==(const QMatrix& rhs) const;

  QMatrix transpose() const;
  bool is_zero() const;

  /// Columns [first, first+count).
  QMatrix column_block(std::size_t first, std::size_t count) const;
  /// Rows [first, first+count).
  QMatrix row_block(std::size_t first, std::size_t count) const;

  /// Least common denominator of all entries and the integer numerators
  /// scaled by it, row-major.
  std::pair<mpz_class, std::vector<mpz_class>> integer_form() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Stack matrices with equal column counts on top of each other.
QMatrix vstack(std::span<const QMatrix> blocks, std::size_t cols);
/// Place matrices with equal row counts side by side.
QMatrix hstack(std::span<const QMatrix> blocks, std::size_t rows);

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

/// Basis of {x : m x = 0}, one column per basis vector.
QMatrix nullspace(const QMatrix& m);

/// Basis of {y : y m = 0}, one row per basis vector.
QMatrix left_nullspace(const QMatrix& m);

/// Inverse of a square matrix; throws InvalidArgument when singular.
QMatrix inverse(const QMatrix& m);

/// Exact determinant of an integer matrix (fraction-free Bareiss).
mpz_class determinant(std::size_t n, std::span<const std::int64_t> values);

}  // namespace ncpq
