#pragma once

#include "artin/algebra.hpp"
#include "artin/subspace.hpp"

namespace artin {

/// Exhaustive-search threshold shared by ideal descent and certification:
/// a space with at most this many elements is swept completely, larger ones
/// are sampled (64 seeded draws). Certified outputs stay correct either way;
/// sampling only affects how fast the descent converges.
inline constexpr uint64_t kEnumerationLimit = uint64_t{1} << 16;

/// Subspace closed under left multiplication by the algebra.
struct LeftIdeal {
  Subspace space;

  size_t dim() const { return space.dim(); }
  bool is_zero() const { return space.is_zero(); }
  bool operator==(const LeftIdeal& o) const { return space == o.space; }
};

bool is_left_ideal(const Algebra& a, const Subspace& s);

/// Smallest left ideal containing the generators: fixed-point closure of the
/// span under one full sweep of basis multiplications per round.
LeftIdeal left_ideal_generated(const Algebra& a, const std::vector<Element>& gens);

/// Closure of span{x} under multiplication on both sides (the ideal RxR).
Subspace two_sided_ideal_generated(const Algebra& a, const Element& x);

/// Span of all products u*v over basis vectors of I and J.
LeftIdeal ideal_product(const Algebra& a, const LeftIdeal& i, const LeftIdeal& j);

bool is_zero_square(const Algebra& a, const LeftIdeal& l);

/// Descends from the given ideal: repeatedly replaces L by the principal
/// ideal of any element that generates a proper nonzero subideal, sweeping a
/// deterministic enumeration of L when it has at most kEnumerationLimit
/// elements (coordinate 0 varies fastest) and falling back to 64 seeded
/// samples otherwise. Dimension strictly decreases at every step, so the
/// descent terminates; a completed sweep is an exhaustive minimality
/// certificate, a completed sampling round only a provisional one.
LeftIdeal descend_to_minimal(const Algebra& a, LeftIdeal from, Rng& rng);

/// descend_to_minimal starting from all of R.
LeftIdeal minimal_left_ideal(const Algebra& a, uint64_t seed);

}  // namespace artin
