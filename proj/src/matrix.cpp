#include "artin/matrix.hpp"

#include <algorithm>

namespace artin {

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, field_->zero()) {}

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols, std::vector<Scalar> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) throw DimensionMismatch("entry count does not match shape");
}

Matrix Matrix::identity(FieldPtr field, size_t n) {
  Matrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, size_t cols, const std::vector<Vec>& rows) {
  Matrix m(std::move(field), rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void Matrix::set_row(size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
  std::copy(v.begin(), v.end(), e_.begin() + r * cols_);
}

void Matrix::append_row(const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
  e_.insert(e_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*field_, *o.field_);
  if (cols_ != o.rows_) throw DimensionMismatch("inner dimensions differ");
  const Field& f = *field_;
  Matrix out(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (scalar_is_zero(a)) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(a, o.at(k, j)));
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_->same(*o.field_) && e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!scalar_is_zero(x)) return false;
  return true;
}

Rref rref(const Matrix& m) {
  const Field& f = *m.field();
  Matrix a = m;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // first row at or below r with a nonzero entry in column c
    size_t sel = a.rows();
    for (size_t i = r; i < a.rows(); ++i)
      if (!scalar_is_zero(a.at(i, c))) {
        sel = i;
        break;
      }
    if (sel == a.rows()) continue;
    if (sel != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
    const Scalar inv_p = f.inv(a.at(r, c));
    for (size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(inv_p, a.at(r, j));
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || scalar_is_zero(a.at(i, c))) continue;
      const Scalar factor = a.at(i, c);
      for (size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(a), std::move(pivots), r};
}

std::optional<Vec> solve(const Matrix& A, const Vec& b) {
  if (b.size() != A.rows()) throw DimensionMismatch("right-hand side length does not match rows");
  const Field& f = *A.field();
  Matrix aug(A.field(), A.rows(), A.cols() + 1);
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  Rref rr = rref(aug);
  // pivot in the augmented column means inconsistent
  if (!rr.pivots.empty() && rr.pivots.back() == A.cols()) return std::nullopt;
  Vec x = zero_vec(f, A.cols());
  for (size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.matrix.at(r, A.cols());
  return x;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("only square matrices are invertible");
  const size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field()->one();
  }
  Rref rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = rr.matrix.at(i, n + j);
  return out;
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw SingularMatrix("matrix is singular");
  return *inv;
}

Matrix nullspace(const Matrix& A) {
  const Field& f = *A.field();
  Rref rr = rref(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  Matrix out(A.field(), 0, A.cols());
  for (size_t c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(f, A.cols());
    v[c] = f.one();
    for (size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = f.neg(rr.matrix.at(r, c));
    out.append_row(v);
  }
  return out;
}

Vec vec_times_matrix(const Vec& v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector length does not match rows");
  const Field& f = *m.field();
  Vec out = zero_vec(f, m.cols());
  for (size_t i = 0; i < v.size(); ++i) {
    if (scalar_is_zero(v[i])) continue;
    for (size_t j = 0; j < m.cols(); ++j)
      out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
  }
  return out;
}

}  // namespace artin
