#pragma once

#include <variant>

#include "artin/algebra.hpp"
#include "artin/subspace.hpp"

namespace artin {

/// The corner ring eRe of an idempotent e, carried both as a subspace of the
/// parent (basis_lift rows are parent coordinates) and as a standalone
/// structure-constant algebra with unity e.
struct CornerAlgebra {
  Element e;
  Matrix basis_lift;  // dim(corner) x dim(parent), RREF rows spanning eRe
  Algebra local;

  size_t dim() const { return local.dim(); }
  /// Parent coordinates of a corner element given in local coordinates.
  Element lift(const Element& local_coords) const {
    return vec_times_matrix(local_coords, basis_lift);
  }
};

/// Grid e_ij with sum_i e_ii = 1 and e_ij e_kl = delta_jk e_il; entries are
/// parent elements, stored row-major.
struct MatrixUnits {
  size_t n = 0;
  std::vector<Element> units;

  const Element& at(size_t i, size_t j) const { return units[i * n + j]; }
  Element& at(size_t i, size_t j) { return units[i * n + j]; }
};

/// Linear ring isomorphism R -> M_n(D), D = e_11 R e_11. forward maps parent
/// coordinates (length d) to the flat entry grid (length n*n*dim D, entry
/// (i,j) coordinate c at index (i*n+j)*dimD + c); backward is its inverse.
struct Isomorphism {
  size_t n = 0;
  CornerAlgebra corner;
  Matrix forward;   // (n^2 dimD) x d
  Matrix backward;  // d x (n^2 dimD)

  Vec apply_forward(const Element& a) const;
  Element apply_backward(const Vec& grid) const;
};

struct DivisionRingInfo {
  bool exhaustive = false;   // swept every nonzero element vs sampled
  bool commutative = false;  // cross-check label only
  uint64_t inverted = 0;     // elements successfully inverted
};

struct NotPrimeWitness {
  Element a, b;  // nonzero, with a*x_i*b = 0 for every basis x_i
};

struct Decomposed {
  std::vector<Element> idempotents;
  MatrixUnits units;
  Isomorphism iso;
  DivisionRingInfo division_ring;

  size_t n() const { return units.n; }
  size_t corner_dim() const { return iso.corner.dim(); }
};

/// Honest third outcome: the retry budget ran out before either certificate
/// could be completed. Never carries an unverified result.
struct Inconclusive {
  int retries = 0;
  std::string reason;
};

using Certificate = std::variant<Decomposed, NotPrimeWitness>;
using DecomposeOutcome = std::variant<Decomposed, NotPrimeWitness, Inconclusive>;

}  // namespace artin
