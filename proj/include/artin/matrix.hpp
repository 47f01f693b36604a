#pragma once

#include <optional>
#include <vector>

#include "artin/field.hpp"

namespace artin {

/// Dense row-major matrix over one field. Target dimensions are small
/// (tens), so there is no sparse path and no fast multiplication.
class Matrix {
public:
  Matrix(FieldPtr field, size_t rows, size_t cols);
  Matrix(FieldPtr field, size_t rows, size_t cols, std::vector<Scalar> entries);

  static Matrix identity(FieldPtr field, size_t n);
  static Matrix from_rows(FieldPtr field, size_t cols, const std::vector<Vec>& rows);

  const FieldPtr& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return e_; }

  Vec row(size_t r) const { return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_); }
  void set_row(size_t r, const Vec& v);
  void append_row(const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

private:
  FieldPtr field_;
  size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct Rref {
  Matrix matrix;
  std::vector<size_t> pivots;
  size_t rank = 0;
};

/// Reduced row-echelon form; row space preserved, fully canonical.
Rref rref(const Matrix& m);

/// One exact solution of A*x = b with free variables set to zero, or absent
/// if the system is inconsistent.
std::optional<Vec> solve(const Matrix& A, const Vec& b);

std::optional<Matrix> try_inverse(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws SingularMatrix

/// Rows span the right kernel {x : A*x = 0}.
Matrix nullspace(const Matrix& A);

/// Row vector times matrix.
Vec vec_times_matrix(const Vec& v, const Matrix& m);

}  // namespace artin
