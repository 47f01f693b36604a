#pragma once

#include <array>
#include <optional>

#include "artin/matrix.hpp"

namespace artin {

/// Ring element as a coordinate vector in the algebra's fixed basis.
using Element = Vec;

/// Finite-dimensional associative unital algebra given by structure
/// constants: basis x_0..x_{d-1} with x_i * x_j = sum_k c(i,j,k) x_k.
/// Immutable after construction; all operations are pure.
class Algebra {
public:
  Algebra(FieldPtr field, size_t dim, std::vector<Scalar> table, Element unity);

  const FieldPtr& field() const { return field_; }
  size_t dim() const { return dim_; }
  const std::vector<Scalar>& table() const { return table_; }
  const Element& unity() const { return unity_; }
  const Scalar& c(size_t i, size_t j, size_t k) const { return table_[(i * dim_ + j) * dim_ + k]; }

  Element zero() const { return zero_vec(*field_, dim_); }
  Element basis(size_t i) const;
  bool is_zero(const Element& a) const { return vec_is_zero(a); }

  /// Bilinear extension of the structure table.
  Element mul(const Element& a, const Element& b) const;  // throws DimensionMismatch
  Element add(const Element& a, const Element& b) const { return vec_add(*field_, a, b); }
  Element sub(const Element& a, const Element& b) const { return vec_sub(*field_, a, b); }
  Element scale(const Scalar& s, const Element& a) const { return vec_scale(*field_, s, a); }

private:
  FieldPtr field_;
  size_t dim_;
  std::vector<Scalar> table_;
  Element unity_;
};

struct ValidationReport {
  enum class Unity { Ok, NoUnity, WrongUnity };

  std::vector<std::array<size_t, 3>> not_associative;  // every failing basis triple (i,j,k)
  Unity unity = Unity::Ok;
  std::optional<Element> found_unity;

  bool ok() const { return not_associative.empty() && unity == Unity::Ok; }
};

/// Exhaustive associativity check over all basis triples plus a unity
/// cross-check against the stored unity. Exhaustiveness makes a passing
/// report a proof, not a sample.
ValidationReport validate(const Algebra& a);

/// Solves the 2*d^2 linear conditions u*x_i = x_i = x_i*u on a raw table.
/// The solution is unique when it exists.
std::optional<Element> find_unity(const FieldPtr& field, size_t dim,
                                  const std::vector<Scalar>& table);

// ---- generators ----

/// M_n(F) on the standard basis E_11, E_12, ..., E_nn in row-major order.
Algebra matrix_algebra(size_t n, FieldPtr field);

/// Block-diagonal sum; unity (1_A, 1_B). Ideals supported on a single block
/// annihilate the other block, so this builds non-prime fixtures.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Group algebra F[C_m]: basis g^0..g^{m-1}, products by exponent addition.
Algebra group_algebra_cyclic(size_t m, FieldPtr field);

/// Quaternions over Q: basis 1, i, j, k.
Algebra quaternion_algebra();

/// New presentation on the basis y_i = sum_j P(i,j) x_j; the coordinate map
/// v -> v*P^{-1} is an isomorphism onto the result.
Algebra change_of_basis(const Algebra& a, const Matrix& p);  // throws SingularMatrix

/// An algebra over F_{p^k} re-presented over F_p: basis t^s x_i ordered
/// (i, s) with index i*k + s, dimension d*k.
Algebra restrict_scalars(const Algebra& a);

/// Rejection-samples matrices with entries from Field::sample until one is
/// invertible. Same seed, same matrix, on every platform.
Matrix random_invertible_matrix(FieldPtr field, size_t n, Rng& rng);

/// change_of_basis by a seeded random invertible matrix; optionally reports
/// the matrix used.
Algebra scramble(const Algebra& a, uint64_t seed, Matrix* used = nullptr);

}  // namespace artin
