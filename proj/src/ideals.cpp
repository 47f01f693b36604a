#include "artin/ideals.hpp"

namespace artin {

bool is_left_ideal(const Algebra& a, const Subspace& s) {
  for (size_t r = 0; r < s.dim(); ++r) {
    const Vec v = s.basis().row(r);
    for (size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.mul(a.basis(i), v))) return false;
  }
  return true;
}

namespace {

enum class Side { Left, Both };

Subspace multiplicative_closure(const Algebra& a, const std::vector<Element>& gens, Side side) {
  Subspace current = Subspace::span(Matrix::from_rows(a.field(), a.dim(), gens));
  for (;;) {
    Matrix stacked = current.basis();
    for (size_t r = 0; r < current.dim(); ++r) {
      const Vec v = current.basis().row(r);
      for (size_t i = 0; i < a.dim(); ++i) {
        stacked.append_row(a.mul(a.basis(i), v));
        if (side == Side::Both) stacked.append_row(a.mul(v, a.basis(i)));
      }
    }
    Subspace next = Subspace::span(stacked);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

}  // namespace

LeftIdeal left_ideal_generated(const Algebra& a, const std::vector<Element>& gens) {
  return LeftIdeal{multiplicative_closure(a, gens, Side::Left)};
}

Subspace two_sided_ideal_generated(const Algebra& a, const Element& x) {
  return multiplicative_closure(a, {x}, Side::Both);
}

LeftIdeal ideal_product(const Algebra& a, const LeftIdeal& i, const LeftIdeal& j) {
  Matrix products(a.field(), 0, a.dim());
  for (size_t r = 0; r < i.dim(); ++r) {
    const Vec u = i.space.basis().row(r);
    for (size_t s = 0; s < j.dim(); ++s) products.append_row(a.mul(u, j.space.basis().row(s)));
  }
  return LeftIdeal{Subspace::span(products)};
}

bool is_zero_square(const Algebra& a, const LeftIdeal& l) {
  return ideal_product(a, l, l).is_zero();
}

namespace {

// Generates a proper nonzero subideal from a candidate element, if it does.
std::optional<LeftIdeal> try_reduce(const Algebra& a, const LeftIdeal& l, const Element& cand) {
  if (vec_is_zero(cand)) return std::nullopt;
  LeftIdeal sub = left_ideal_generated(a, {cand});
  if (sub.dim() > 0 && sub.dim() < l.dim()) return sub;
  return std::nullopt;
}

Element sample_of(const Algebra& a, const Subspace& s, Rng& rng) {
  const Field& f = *a.field();
  Vec coords(s.dim());
  for (auto& c : coords) c = f.sample(rng);
  return vec_times_matrix(coords, s.basis());
}

}  // namespace

LeftIdeal descend_to_minimal(const Algebra& a, LeftIdeal from, Rng& rng) {
  LeftIdeal l = std::move(from);
  for (bool reduced = true; reduced && l.dim() > 0;) {
    reduced = false;
    if (auto count = l.space.count_at_most(kEnumerationLimit)) {
      for (uint64_t idx = 1; idx < *count; ++idx) {
        if (auto sub = try_reduce(a, l, l.space.element_at(idx))) {
          l = std::move(*sub);
          reduced = true;
          break;
        }
      }
    } else {
      for (int trial = 0; trial < 64; ++trial) {
        if (auto sub = try_reduce(a, l, sample_of(a, l.space, rng))) {
          l = std::move(*sub);
          reduced = true;
          break;
        }
      }
    }
  }
  return l;
}

LeftIdeal minimal_left_ideal(const Algebra& a, uint64_t seed) {
  Rng rng(seed);
  return descend_to_minimal(a, left_ideal_generated(a, {a.unity()}), rng);
}

}  // namespace artin
