#include "arsubcat/exactlin/matrix.hpp"

#include <algorithm>

#include "arsubcat/errors.hpp"
#include "arsubcat/exactlin/polynomial.hpp"

#ifdef ARSUBCAT_HAVE_OPENMP
#include <omp.h>
#endif

namespace arsubcat {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (auto& r : rows) v.emplace_back(r);
  return from_rows(field, v);
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(PrimeField field, std::span<const Residue> entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i] % field.modulus();
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      const Residue* orow = o.data_.data() + k * o.cols_;
      for (std::size_t c = 0; c < o.cols_; ++c) acc[c] = (acc[c] + a * orow[c]) % p;
    }
    for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) = static_cast<Residue>(acc[c]);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out = *this;
  out += o;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::scaled(Residue c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, c);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(rows[i] * cols_), cols_, out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw PreconditionError("matrix block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw PreconditionError("matrix block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::column_at(std::size_t c) const {
  Matrix out(field_, rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << "] (" << m.rows() << "x" << m.cols() << ")";
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw PreconditionError("hstack row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw PreconditionError("vstack column mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

namespace {

// Eliminates column `col` from every row except `pivot_row`, whose pivot
// entry is already 1.
inline void eliminate_row(Matrix& m, std::size_t r, std::size_t pivot_row, std::size_t col) {
  const PrimeField& k = m.field();
  Residue f = m(r, col);
  if (f == 0) return;
  auto target = m.row(r);
  auto src = m.row(pivot_row);
  const Residue nf = k.neg(f);
  for (std::size_t c = col; c < target.size(); ++c) {
    if (src[c] != 0) target[c] = k.add(target[c], k.mul(nf, src[c]));
  }
}

constexpr std::size_t kParallelThreshold = 64 * 64;

Rref rref_impl(const Matrix& input, bool parallel) {
  Matrix m = input;
  const PrimeField& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  const std::size_t rows = m.rows();
#ifndef ARSUBCAT_HAVE_OPENMP
  (void)parallel;
#endif
  for (std::size_t col = 0; col < m.cols() && prow < rows; ++col) {
    std::size_t sel = prow;
    while (sel < rows && m(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != prow) {
      auto a = m.row(sel);
      auto b = m.row(prow);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    Residue inv = k.inv(m(prow, col));
    if (inv != 1) {
      for (auto& x : m.row(prow)) x = k.mul(x, inv);
    }
#ifdef ARSUBCAT_HAVE_OPENMP
    if (parallel && rows * m.cols() >= kParallelThreshold) {
      const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t r = 0; r < n; ++r) {
        if (static_cast<std::size_t>(r) != prow) eliminate_row(m, static_cast<std::size_t>(r), prow, col);
      }
    } else
#endif
    {
      for (std::size_t r = 0; r < rows; ++r)
        if (r != prow) eliminate_row(m, r, prow, col);
    }
    pivots.push_back(col);
    ++prow;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Rref rref(const Matrix& m) { return rref_impl(m, true); }
Rref rref_serial(const Matrix& m) { return rref_impl(m, false); }

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
  const PrimeField& k = m.field();
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(k, m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    basis(fc, j) = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) basis(rr.pivots[i], j) = k.neg(rr.reduced(i, fc));
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw PreconditionError("solve: row count mismatch");
  const PrimeField& k = m.field();
  Rref rr = rref(hstack(m, b));
  Matrix x(k, m.cols(), b.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(rr.pivots[i], c) = rr.reduced(i, m.cols() + c);
  }
  return x;
}

bool image_membership(const Matrix& span, const Matrix& v) {
  if (span.rows() != v.rows()) throw PreconditionError("image_membership: row count mismatch");
  return rank(hstack(span, v)) == rank(span);
}

Matrix column_space(const Matrix& m) {
  Rref rr = rref(m);
  return m.select_columns(rr.pivots);
}

Matrix cokernel_projection(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

Matrix complement_columns(const Matrix& span) {
  const std::size_t n = span.rows();
  Rref rr = rref(hstack(span, Matrix::identity(span.field(), n)));
  std::vector<std::size_t> picked;
  for (auto c : rr.pivots)
    if (c >= span.cols()) picked.push_back(c - span.cols());
  Matrix id = Matrix::identity(span.field(), n);
  return id.select_columns(picked);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Rref rr = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (rr.pivots.size() < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix power(const Matrix& m, std::uint64_t k) {
  if (!m.is_square()) throw PreconditionError("power of non-square matrix");
  Matrix r = Matrix::identity(m.field(), m.rows());
  Matrix b = m;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool is_nilpotent(const Matrix& m) { return power(m, m.rows()).is_zero(); }

Matrix evaluate_polynomial(std::span<const Residue> coeffs, const Matrix& square) {
  if (!square.is_square()) throw PreconditionError("evaluate_polynomial: non-square matrix");
  const std::size_t n = square.rows();
  Matrix acc(square.field(), n, n);
  // Horner
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * square;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) = square.field().add(acc(d, d), coeffs[i]);
  }
  return acc;
}

std::vector<Residue> minimal_polynomial(const Matrix& square) {
  if (!square.is_square()) throw PreconditionError("minimal_polynomial: non-square matrix");
  const PrimeField& k = square.field();
  const std::size_t n = square.rows();
  poly::Poly acc{1};
  for (std::size_t j = 0; j < n; ++j) {
    Matrix e(k, n, 1);
    e(j, 0) = 1;
    if (evaluate_polynomial(acc, square).column_at(j).is_zero()) continue;
    // Krylov sequence e, Ae, A^2 e, ... until the first dependency.
    Matrix krylov = e;
    Matrix v = e;
    for (;;) {
      v = square * v;
      auto c = solve(krylov, v);
      if (c) {
        poly::Poly local(krylov.cols() + 1, 0);
        for (std::size_t i = 0; i < krylov.cols(); ++i) local[i] = k.neg((*c)(i, 0));
        local[krylov.cols()] = 1;
        acc = poly::lcm(k, acc, local);
        break;
      }
      krylov = hstack(krylov, v);
    }
  }
  return acc;
}

}  // namespace arsubcat
