#pragma once

#include "artin/certificate.hpp"
#include "artin/ideals.hpp"

namespace artin {

struct NilpotentWitness {
  Element a, b;  // nonzero elements of a square-zero ideal
};

/// A step that assumed minimality of L found a strictly smaller nonzero left
/// ideal inside it; the caller re-enters descent there.
struct MinimalityRefuted {
  LeftIdeal smaller;
};

using IdempotentOutcome = std::variant<Element, NilpotentWitness, MinimalityRefuted>;

/// From a (possibly provisionally) minimal left ideal L: if L^2 = {0},
/// nonzero a, b in L witness a R b = {0}; otherwise picks the first basis
/// vector y of L with L*y != {0}, solves e*y = y inside L, and returns the
/// unique idempotent generator of L. Non-unique or missing solutions refute
/// minimality and carry the smaller ideal found.
IdempotentOutcome idempotent_from_minimal_ideal(const Algebra& a, const LeftIdeal& l);

/// Structure constants of eRe on the RREF basis of span{e x_i e}.
CornerAlgebra corner_algebra(const Algebra& a, const Element& e);  // throws ZeroCorner

/// Two-sided inverse of x in the corner (w*x = x*w = e), or absent when x is
/// not invertible there — which refutes the corner being a division ring.
std::optional<Element> invert_in_corner(const CornerAlgebra& c, const Element& x_local);

struct ConnectingPair {
  Element u, v;  // u in eRf, v in fRe, u*v = e, v*u = f
};
using ConnectOutcome = std::variant<ConnectingPair, NotPrimeWitness>;

/// Scans basis pairs (i,j) in lexicographic order for e x_i f x_j e != 0 and
/// builds the connecting pair from the first hit. No hit proves eRf fRe = {0}
/// and yields a verified non-primeness witness.
ConnectOutcome connecting_pair(const Algebra& a, const Element& e, const Element& f);

using PeelOutcome = std::variant<std::vector<Element>, NotPrimeWitness, Inconclusive>;

/// Orthogonal idempotents e_1..e_n with sum 1 and division-ring corners,
/// peeled one at a time from the corner (1 - e_1 - ... - e_k) R (...).
PeelOutcome peel_idempotents(const Algebra& a, uint64_t seed);

/// Full grid from the diagonal idempotents and the connecting pairs to e_1
/// (e_ij = e_i1 e_1j); verifies all n^4 relations. Throws RelationsFailed on
/// upstream corruption.
MatrixUnits complete_matrix_units(const Algebra& a, const std::vector<Element>& idempotents,
                                  const std::vector<ConnectingPair>& to_first);

/// forward(a)(i,j) = corner coordinates of e_1i a e_j1; backward is built
/// from the unit grid. Total given valid units.
Isomorphism build_isomorphism(const Algebra& a, const MatrixUnits& mu);

/// The full pipeline: peel, connect, complete the unit grid, build the
/// isomorphism, and certify everything before returning. Deterministic in
/// (a, seed); internal retries are bounded, with Inconclusive as the honest
/// exhaustion report.
DecomposeOutcome decompose(const Algebra& a, uint64_t seed);

}  // namespace artin
