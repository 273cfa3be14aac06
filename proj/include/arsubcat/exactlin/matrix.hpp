#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "arsubcat/exactlin/prime_field.hpp"

namespace arsubcat {

/// Dense row-major matrix over GF(p). 0 x n and n x 0 shapes are legal and
/// act as the identity of direct sums.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  static Matrix identity(PrimeField field, std::size_t n);
  /// Entries are reduced mod p, so negative literals are fine.
  static Matrix from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols_if_empty = 0);
  static Matrix column(PrimeField field, std::span<const Residue> entries);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }

  std::span<const Residue> data() const { return data_; }
  std::span<Residue> data() { return data_; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Residue c) const;
  Matrix& operator+=(const Matrix& o);

  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column_at(std::size_t c) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination with first-nonzero pivoting. Row updates run on
/// OpenMP threads once the matrix is large enough; the result is identical to
/// rref_serial bit for bit.
Rref rref(const Matrix& m);
/// Single-threaded reference for rref.
Rref rref_serial(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {v : m v = 0}, one per non-pivot column.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent. Free variables are 0.
/// Throws PreconditionError when m.rows() != b.rows().
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// True iff the column vector v lies in the column span of `span`.
bool image_membership(const Matrix& span, const Matrix& v);

/// A basis (subset of the columns of m) of the column space.
Matrix column_space(const Matrix& m);

/// A matrix C with ker C = im m and C surjective (rows = m.rows() - rank).
Matrix cokernel_projection(const Matrix& m);

/// Standard basis columns e_j, taken greedily in order j = 0, 1, ..., that
/// complete the column span of `span` to the whole ambient space.
Matrix complement_columns(const Matrix& span);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
bool is_nilpotent(const Matrix& m);
Matrix power(const Matrix& m, std::uint64_t k);

/// Monic least-degree annihilating polynomial, coefficients low to high.
std::vector<Residue> minimal_polynomial(const Matrix& square);
Matrix evaluate_polynomial(std::span<const Residue> coeffs, const Matrix& square);

}  // namespace arsubcat
