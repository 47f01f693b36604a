#include "artin/decompose.hpp"

#include "artin/certify.hpp"

namespace artin {

namespace {

// Impossible-by-the-theory states detected at runtime; the decompose driver
// turns them into a fresh attempt instead of an unverified certificate.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace

Vec Isomorphism::apply_forward(const Element& a) const {
  if (a.size() != forward.cols()) throw DimensionMismatch("element length does not match map");
  const Field& f = *forward.field();
  Vec out = zero_vec(f, forward.rows());
  for (size_t c = 0; c < a.size(); ++c) {
    if (scalar_is_zero(a[c])) continue;
    for (size_t r = 0; r < forward.rows(); ++r)
      out[r] = f.add(out[r], f.mul(forward.at(r, c), a[c]));
  }
  return out;
}

Element Isomorphism::apply_backward(const Vec& grid) const {
  if (grid.size() != backward.cols()) throw DimensionMismatch("grid length does not match map");
  const Field& f = *backward.field();
  Vec out = zero_vec(f, backward.rows());
  for (size_t c = 0; c < grid.size(); ++c) {
    if (scalar_is_zero(grid[c])) continue;
    for (size_t r = 0; r < backward.rows(); ++r)
      out[r] = f.add(out[r], f.mul(backward.at(r, c), grid[c]));
  }
  return out;
}

IdempotentOutcome idempotent_from_minimal_ideal(const Algebra& a, const LeftIdeal& l) {
  if (l.is_zero()) throw DimensionMismatch("minimal ideal must be nonzero");
  const Matrix& basis = l.space.basis();

  if (is_zero_square(a, l)) {
    // a R b subseteq a L subseteq L^2 = {0} for any a, b in L
    Element w = basis.row(0);
    return NilpotentWitness{w, w};
  }

  for (size_t yi = 0; yi < l.dim(); ++yi) {
    const Vec y = basis.row(yi);
    // rows of m are u_r * y for the basis u_r of L; the span of the rows is Ly
    Matrix m(a.field(), l.dim(), a.dim());
    for (size_t r = 0; r < l.dim(); ++r) m.set_row(r, a.mul(basis.row(r), y));
    if (m.is_zero()) continue;  // L*y = {0}, try the next basis vector

    Matrix mt = m.transpose();
    auto t = solve(mt, y);
    if (!t) {
      // y lies outside Ly, so Ly is a proper nonzero subideal of L
      return MinimalityRefuted{LeftIdeal{Subspace::span(m)}};
    }
    Matrix ker = nullspace(mt);
    if (ker.rows() > 0) {
      // J = {z in L : z*y = 0} is a nonzero left ideal strictly inside L
      Matrix ambient(a.field(), 0, a.dim());
      for (size_t r = 0; r < ker.rows(); ++r)
        ambient.append_row(vec_times_matrix(ker.row(r), basis));
      return MinimalityRefuted{LeftIdeal{Subspace::span(ambient)}};
    }
    Element e = vec_times_matrix(*t, basis);
    if (a.mul(e, e) != e)
      throw InternalInconsistency("solved e*y = y with trivial J, yet e is not idempotent");
    LeftIdeal re = left_ideal_generated(a, {e});
    if (!(re.space == l.space)) return MinimalityRefuted{std::move(re)};
    return e;
  }
  throw InternalInconsistency("L^2 != {0} but no basis vector y has L*y != {0}");
}

CornerAlgebra corner_algebra(const Algebra& a, const Element& e) {
  if (vec_is_zero(e)) throw ZeroCorner("corner of the zero element");
  if (a.mul(e, e) != e) throw DimensionMismatch("corner requires an idempotent");
  Matrix gens(a.field(), 0, a.dim());
  for (size_t i = 0; i < a.dim(); ++i) gens.append_row(a.mul(a.mul(e, a.basis(i)), e));
  Subspace space = Subspace::span(gens);
  const size_t k = space.dim();

  std::vector<Scalar> table;
  table.reserve(k * k * k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Element prod = a.mul(space.basis().row(i), space.basis().row(j));
      auto coords = space.coordinates(prod);
      if (!coords) throw InternalInconsistency("corner span not closed under multiplication");
      table.insert(table.end(), coords->begin(), coords->end());
    }
  auto unity = space.coordinates(e);
  if (!unity) throw InternalInconsistency("idempotent not contained in its own corner");
  Algebra local(a.field(), k, std::move(table), std::move(*unity));
  return CornerAlgebra{e, space.basis(), std::move(local)};
}

std::optional<Element> invert_in_corner(const CornerAlgebra& c, const Element& x_local) {
  const Algebra& b = c.local;
  if (b.is_zero(x_local)) return std::nullopt;
  // w*x = e as a linear system in the coordinates of w
  Matrix m(b.field(), b.dim(), b.dim());
  for (size_t r = 0; r < b.dim(); ++r) m.set_row(r, b.mul(b.basis(r), x_local));
  auto w = solve(m.transpose(), b.unity());
  if (!w) return std::nullopt;
  if (b.mul(x_local, *w) != b.unity()) return std::nullopt;
  return w;
}

namespace {

std::optional<Vec> corner_coordinates(const CornerAlgebra& c, const Element& parent_elem) {
  // basis_lift rows are in RREF, so coordinates are the pivot entries
  return Subspace::span(c.basis_lift).coordinates(parent_elem);
}

}  // namespace

ConnectOutcome connecting_pair(const Algebra& a, const Element& e, const Element& f) {
  CornerAlgebra ce = corner_algebra(a, e);
  for (size_t i = 0; i < a.dim(); ++i) {
    Element exf = a.mul(a.mul(e, a.basis(i)), f);
    if (vec_is_zero(exf)) continue;
    for (size_t j = 0; j < a.dim(); ++j) {
      Element w = a.mul(a.mul(exf, a.basis(j)), e);  // e x_i f x_j e
      if (vec_is_zero(w)) continue;
      auto w_local = corner_coordinates(ce, w);
      if (!w_local) throw InternalInconsistency("e x f x e escaped the corner of e");
      auto c_local = invert_in_corner(ce, *w_local);
      if (!c_local)
        throw InternalInconsistency("corner of e is not a division ring at connecting time");
      Element c_parent = ce.lift(*c_local);
      Element u = exf;
      Element v = a.mul(a.mul(f, a.basis(j)), c_parent);
      if (a.mul(u, v) != e || a.mul(v, u) != f)
        throw InternalInconsistency("connecting pair failed its defining relations");
      return ConnectingPair{std::move(u), std::move(v)};
    }
  }
  // every e x_i f x_j e vanished, so eRf * fRe = {0}; a verified witness follows
  Element wa = e, wb = f;
  for (size_t i = 0; i < a.dim(); ++i) {
    Element exf = a.mul(a.mul(e, a.basis(i)), f);
    if (!vec_is_zero(exf)) {
      wa = std::move(exf);  // (e x f) R e = {0} by the failed scan
      wb = e;
      break;
    }
  }
  for (size_t i = 0; i < a.dim(); ++i)
    if (!vec_is_zero(a.mul(a.mul(wa, a.basis(i)), wb)))
      throw InternalInconsistency("non-primeness witness failed its sweep");
  return NotPrimeWitness{std::move(wa), std::move(wb)};
}

namespace {

struct Budget {
  int limit = 1000;
  int used = 0;
  bool spend() {
    if (used >= limit) return false;
    ++used;
    return true;
  }
};

using ExtractOutcome = std::variant<Element, NilpotentWitness, Inconclusive>;

// One idempotent with a division-ring corner out of the algebra b, or a
// square-zero ideal witness. Refutations re-enter descent in the smaller
// ideal, so outputs are certified regardless of sampling luck.
ExtractOutcome extract_division_idempotent(const Algebra& b, Rng& rng, Budget& budget) {
  LeftIdeal l = descend_to_minimal(b, left_ideal_generated(b, {b.unity()}), rng);
  for (;;) {
    IdempotentOutcome out = idempotent_from_minimal_ideal(b, l);
    if (auto* w = std::get_if<NilpotentWitness>(&out)) return *w;
    if (auto* refuted = std::get_if<MinimalityRefuted>(&out)) {
      if (!budget.spend())
        return Inconclusive{budget.used, "retry budget exhausted during ideal descent"};
      l = descend_to_minimal(b, std::move(refuted->smaller), rng);
      continue;
    }
    Element e = std::get<Element>(std::move(out));
    CornerAlgebra ce = corner_algebra(b, e);
    DivisionRingResult dr = verify_division_ring(ce, rng.next());
    if (dr.report.ok()) return e;
    if (!budget.spend())
      return Inconclusive{budget.used, "retry budget exhausted during division-ring checks"};
    if (dr.not_invertible) {
      // a non-invertible corner element generates a strictly smaller ideal
      Element z = ce.lift(*dr.not_invertible);
      LeftIdeal rz = left_ideal_generated(b, {z});
      if (!rz.is_zero() && rz.dim() < l.dim()) {
        l = descend_to_minimal(b, std::move(rz), rng);
        continue;
      }
    }
    l = descend_to_minimal(b, left_ideal_generated(b, {b.unity()}), rng);
  }
}

PeelOutcome peel_impl(const Algebra& a, Rng& rng, Budget& budget) {
  std::vector<Element> idempotents;
  Element f = a.unity();
  size_t prev_corner_dim = a.dim() + 1;
  while (!vec_is_zero(f)) {
    CornerAlgebra corner = corner_algebra(a, f);
    if (corner.dim() >= prev_corner_dim)
      throw InternalInconsistency("peel corner dimension failed to decrease");
    prev_corner_dim = corner.dim();

    ExtractOutcome out = extract_division_idempotent(corner.local, rng, budget);
    if (auto* inc = std::get_if<Inconclusive>(&out)) return *inc;
    if (auto* w = std::get_if<NilpotentWitness>(&out)) {
      // corner elements are parent elements; lift and re-certify at the top
      Element wa = corner.lift(w->a);
      Element wb = corner.lift(w->b);
      if (!verify_not_prime_witness(a, wa, wb).ok())
        throw InternalInconsistency("lifted witness failed parent-level certification");
      return NotPrimeWitness{std::move(wa), std::move(wb)};
    }
    Element e = corner.lift(std::get<Element>(std::move(out)));
    if (a.mul(e, e) != e) throw InternalInconsistency("lifted idempotent is not idempotent");
    idempotents.push_back(e);
    f = a.sub(f, e);
  }
  return idempotents;
}

struct RetryAttempt {
  std::string why;
};

using AttemptOutcome = std::variant<Decomposed, NotPrimeWitness, Inconclusive, RetryAttempt>;

AttemptOutcome attempt_once(const Algebra& a, Rng& rng, Budget& budget) {
  PeelOutcome peeled = peel_impl(a, rng, budget);
  if (auto* inc = std::get_if<Inconclusive>(&peeled)) return *inc;
  if (auto* w = std::get_if<NotPrimeWitness>(&peeled)) return *w;
  auto idempotents = std::get<std::vector<Element>>(std::move(peeled));

  std::vector<ConnectingPair> pairs;
  for (size_t i = 1; i < idempotents.size(); ++i) {
    ConnectOutcome out = connecting_pair(a, idempotents[0], idempotents[i]);
    if (auto* w = std::get_if<NotPrimeWitness>(&out)) return *w;
    pairs.push_back(std::get<ConnectingPair>(std::move(out)));
  }

  MatrixUnits mu = complete_matrix_units(a, idempotents, pairs);
  Isomorphism iso = build_isomorphism(a, mu);

  Report certification;
  certification.merge(verify_matrix_units(a, mu));
  certification.merge(verify_isomorphism(a, iso));
  DivisionRingResult dr = verify_division_ring(iso.corner, rng.next());
  certification.merge(dr.report);
  if (!certification.ok()) return RetryAttempt{"certification rejected the candidate decomposition"};
  return Decomposed{std::move(idempotents), std::move(mu), std::move(iso), dr.info};
}

}  // namespace

PeelOutcome peel_idempotents(const Algebra& a, uint64_t seed) {
  Rng rng(seed);
  Budget budget;
  return peel_impl(a, rng, budget);
}

MatrixUnits complete_matrix_units(const Algebra& a, const std::vector<Element>& idempotents,
                                  const std::vector<ConnectingPair>& to_first) {
  const size_t n = idempotents.size();
  if (n == 0) throw DimensionMismatch("need at least one idempotent");
  if (to_first.size() != n - 1)
    throw DimensionMismatch("need exactly one connecting pair per idempotent beyond the first");
  MatrixUnits mu{n, std::vector<Element>(n * n, a.zero())};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == 0 && j == 0)
        mu.at(0, 0) = idempotents[0];
      else if (i == 0)
        mu.at(0, j) = to_first[j - 1].u;
      else if (j == 0)
        mu.at(i, 0) = to_first[i - 1].v;
      else
        mu.at(i, j) = a.mul(to_first[i - 1].v, to_first[j - 1].u);  // e_i1 e_1j
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
          const Element expected = j == k ? mu.at(i, l) : a.zero();
          if (a.mul(mu.at(i, j), mu.at(k, l)) != expected) throw RelationsFailed(i, j, k, l);
        }
  return mu;
}

Isomorphism build_isomorphism(const Algebra& a, const MatrixUnits& mu) {
  const size_t n = mu.n, d = a.dim();
  CornerAlgebra corner = corner_algebra(a, mu.at(0, 0));
  const size_t k = corner.dim();
  Subspace corner_space = Subspace::span(corner.basis_lift);

  Matrix forward(a.field(), n * n * k, d);
  for (size_t m = 0; m < d; ++m) {
    const Element xm = a.basis(m);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Element part = a.mul(a.mul(mu.at(0, i), xm), mu.at(j, 0));  // e_1i a e_j1
        auto coords = corner_space.coordinates(part);
        if (!coords) throw InternalInconsistency("matrix entry escaped the corner");
        for (size_t c = 0; c < k; ++c) forward.at((i * n + j) * k + c, m) = (*coords)[c];
      }
  }
  Matrix backward(a.field(), d, n * n * k);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t c = 0; c < k; ++c) {
        Element lifted = corner.lift(corner.local.basis(c));
        Element col = a.mul(a.mul(mu.at(i, 0), lifted), mu.at(0, j));  // e_i1 d e_1j
        for (size_t m = 0; m < d; ++m) backward.at(m, (i * n + j) * k + c) = col[m];
      }
  return Isomorphism{n, std::move(corner), std::move(forward), std::move(backward)};
}

DecomposeOutcome decompose(const Algebra& a, uint64_t seed) {
  Budget budget;
  for (uint64_t attempt = 0;; ++attempt) {
    Rng rng(Rng::substream(seed, attempt));
    AttemptOutcome out{RetryAttempt{}};
    try {
      out = attempt_once(a, rng, budget);
    } catch (const InternalInconsistency& e) {
      out = RetryAttempt{e.what()};
    } catch (const RelationsFailed& e) {
      out = RetryAttempt{e.what()};
    }
    if (auto* d = std::get_if<Decomposed>(&out)) return std::move(*d);
    if (auto* w = std::get_if<NotPrimeWitness>(&out)) {
      if (!verify_not_prime_witness(a, w->a, w->b).ok())
        return Inconclusive{budget.used, "witness failed final certification"};
      return std::move(*w);
    }
    if (auto* inc = std::get_if<Inconclusive>(&out)) return std::move(*inc);
    if (!budget.spend())
      return Inconclusive{budget.used, std::get<RetryAttempt>(out).why};
  }
}

}  // namespace artin
