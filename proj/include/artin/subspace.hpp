#pragma once

#include <optional>

#include "artin/matrix.hpp"

namespace artin {

/// Linear subspace in canonical form: the basis is the RREF of any generating
/// set with zero rows dropped. Two subspaces are equal iff their bases are
/// identical entry-wise, which makes equality and containment exact and cheap.
class Subspace {
public:
  static Subspace span(const Matrix& generators);
  static Subspace zero(FieldPtr field, size_t ambient);
  static Subspace full(FieldPtr field, size_t ambient);

  size_t ambient() const { return basis_.cols(); }
  size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const FieldPtr& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  /// Coordinates of v in the basis rows, or absent if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& o) const;  // throws AmbientMismatch
  bool subset_of(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  /// Number of elements |F|^dim if the field is finite and the count is at
  /// most limit.
  std::optional<uint64_t> count_at_most(uint64_t limit) const;
  /// idx-th element in counting order: idx written base |F|, digit i scaling
  /// basis row i (digit for row 0 varies fastest).
  Vec element_at(uint64_t idx) const;

private:
  explicit Subspace(Rref rr);

  Matrix basis_;
  std::vector<size_t> pivots_;
};

}  // namespace artin
