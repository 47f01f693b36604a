#include "artin/subspace.hpp"

namespace artin {

Subspace::Subspace(Rref rr) : basis_(rr.matrix.field(), 0, rr.matrix.cols()), pivots_(std::move(rr.pivots)) {
  for (size_t r = 0; r < rr.rank; ++r) basis_.append_row(rr.matrix.row(r));
}

Subspace Subspace::span(const Matrix& generators) { return Subspace(rref(generators)); }

Subspace Subspace::zero(FieldPtr field, size_t ambient) {
  return Subspace::span(Matrix(std::move(field), 0, ambient));
}

Subspace Subspace::full(FieldPtr field, size_t ambient) {
  return Subspace::span(Matrix::identity(std::move(field), ambient));
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient()) throw AmbientMismatch("vector length does not match ambient dimension");
  const Field& f = *field();
  // with an RREF basis the candidate coordinates are just the pivot entries
  Vec coords(dim());
  for (size_t r = 0; r < dim(); ++r) coords[r] = v[pivots_[r]];
  Vec rebuilt = zero_vec(f, ambient());
  for (size_t r = 0; r < dim(); ++r) {
    if (scalar_is_zero(coords[r])) continue;
    for (size_t c = 0; c < ambient(); ++c)
      rebuilt[c] = f.add(rebuilt[c], f.mul(coords[r], basis_.at(r, c)));
  }
  if (rebuilt != v) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient() != o.ambient()) throw AmbientMismatch("ambient dimensions differ");
  require_same_field(*field(), *o.field());
  Matrix stacked = basis_;
  for (size_t r = 0; r < o.dim(); ++r) stacked.append_row(o.basis_.row(r));
  return Subspace::span(stacked);
}

bool Subspace::subset_of(const Subspace& o) const {
  if (ambient() != o.ambient()) throw AmbientMismatch("ambient dimensions differ");
  for (size_t r = 0; r < dim(); ++r)
    if (!o.contains(basis_.row(r))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const { return basis_ == o.basis_; }

std::optional<uint64_t> Subspace::count_at_most(uint64_t limit) const {
  const Field& f = *field();
  if (f.kind() == Field::Kind::Rational) return std::nullopt;
  auto per = f.order_at_most(limit);
  if (!per) return dim() == 0 ? std::optional<uint64_t>(1) : std::nullopt;
  uint64_t n = 1;
  for (size_t i = 0; i < dim(); ++i) {
    if (n > limit / *per) return std::nullopt;
    n *= *per;
  }
  return n <= limit ? std::optional<uint64_t>(n) : std::nullopt;
}

Vec Subspace::element_at(uint64_t idx) const {
  const Field& f = *field();
  auto per = f.order_at_most(~uint64_t{0});
  if (!per) throw Error("cannot enumerate a subspace over Q");
  Vec out = zero_vec(f, ambient());
  for (size_t r = 0; r < dim(); ++r) {
    Scalar digit = f.element(idx % *per);
    idx /= *per;
    if (scalar_is_zero(digit)) continue;
    for (size_t c = 0; c < ambient(); ++c)
      out[c] = f.add(out[c], f.mul(digit, basis_.at(r, c)));
  }
  return out;
}

}  // namespace artin
