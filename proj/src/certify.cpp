#include "artin/certify.hpp"

#include <algorithm>

#include "artin/ideals.hpp"

namespace artin {

namespace {

std::string vec_str(const Field& f, const Vec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += f.str(v[i]);
  }
  return out + ")";
}

// Solve-based two-sided inversion written against the definitions alone;
// deliberately not shared with the pipeline's invert_in_corner.
std::optional<Element> try_invert(const Algebra& b, const Element& x) {
  if (b.is_zero(x)) return std::nullopt;
  Matrix m(b.field(), b.dim(), b.dim());
  for (size_t r = 0; r < b.dim(); ++r) m.set_row(r, b.mul(b.basis(r), x));
  auto w = solve(m.transpose(), b.unity());
  if (!w) return std::nullopt;
  if (b.mul(x, *w) != b.unity()) return std::nullopt;
  return w;
}

Element local_element(const Algebra& b, uint64_t idx) {
  const Field& f = *b.field();
  auto per = f.order_at_most(~uint64_t{0});
  Element out = b.zero();
  for (size_t c = 0; c < b.dim(); ++c) {
    out[c] = f.element(idx % *per);
    idx /= *per;
  }
  return out;
}

std::optional<uint64_t> element_count(const Algebra& b, uint64_t limit) {
  const Field& f = *b.field();
  auto per = f.order_at_most(limit);
  if (!per) return std::nullopt;
  uint64_t n = 1;
  for (size_t i = 0; i < b.dim(); ++i) {
    if (n > limit / *per) return std::nullopt;
    n *= *per;
  }
  return n <= limit ? std::optional<uint64_t>(n) : std::nullopt;
}

}  // namespace

Report verify_matrix_units(const Algebra& a, const MatrixUnits& mu) {
  Report r;
  if (mu.n == 0 || mu.units.size() != mu.n * mu.n)
    throw DimensionMismatch("unit grid has wrong shape");
  for (const auto& u : mu.units)
    if (u.size() != a.dim()) throw DimensionMismatch("unit coordinates have wrong length");

  Element sum = a.zero();
  for (size_t i = 0; i < mu.n; ++i) sum = a.add(sum, mu.at(i, i));
  r.add("unit_diagonal_sum", sum == a.unity(),
        sum == a.unity() ? "" : "sum of e_ii differs from unity");

  size_t failures = 0;
  for (size_t i = 0; i < mu.n; ++i)
    for (size_t j = 0; j < mu.n; ++j)
      for (size_t k = 0; k < mu.n; ++k)
        for (size_t l = 0; l < mu.n; ++l) {
          const Element expected = j == k ? mu.at(i, l) : a.zero();
          if (a.mul(mu.at(i, j), mu.at(k, l)) != expected) {
            ++failures;
            r.add("unit_relation(" + std::to_string(i) + "," + std::to_string(j) + ")x(" +
                      std::to_string(k) + "," + std::to_string(l) + ")",
                  false, "product differs from delta rule");
          }
        }
  if (failures == 0)
    r.add("unit_relations", true,
          std::to_string(mu.n * mu.n * mu.n * mu.n) + " products checked");
  return r;
}

Report verify_isomorphism(const Algebra& a, const Isomorphism& iso) {
  Report r;
  const size_t n = iso.n, d = a.dim(), k = iso.corner.dim();
  const Algebra& local = iso.corner.local;
  if (iso.forward.rows() != n * n * k || iso.forward.cols() != d ||
      iso.backward.rows() != d || iso.backward.cols() != n * n * k)
    throw DimensionMismatch("isomorphism maps have wrong shape");
  if (iso.corner.basis_lift.rows() != k || iso.corner.basis_lift.cols() != d)
    throw DimensionMismatch("corner basis has wrong shape");

  r.add("dimension", d == n * n * k,
        std::to_string(d) + " vs n^2*dimD = " + std::to_string(n * n * k));

  const Element& e = iso.corner.e;
  r.add("corner_idempotent", !vec_is_zero(e) && a.mul(e, e) == e);

  // the corner data in the certificate must match the parent algebra
  bool embed_ok = true;
  for (size_t i = 0; i < k && embed_ok; ++i) {
    Vec v = iso.corner.basis_lift.row(i);
    embed_ok = a.mul(a.mul(e, v), e) == v;
  }
  r.add("corner_embedding", embed_ok, embed_ok ? "" : "basis vector not fixed by e._.e");

  Subspace corner_space = Subspace::span(iso.corner.basis_lift);
  bool table_ok = corner_space.dim() == k;
  for (size_t i = 0; i < k && table_ok; ++i)
    for (size_t j = 0; j < k && table_ok; ++j) {
      Element prod =
          a.mul(iso.corner.basis_lift.row(i), iso.corner.basis_lift.row(j));
      auto coords = corner_space.coordinates(prod);
      table_ok = coords.has_value();
      if (table_ok)
        for (size_t c = 0; c < k; ++c) table_ok = table_ok && (*coords)[c] == local.c(i, j, c);
    }
  if (table_ok) {
    auto e_coords = corner_space.coordinates(e);
    table_ok = e_coords.has_value() && *e_coords == local.unity();
  }
  r.add("corner_table", table_ok, table_ok ? "" : "local structure constants disagree with parent products");

  // grid multiplication over the corner
  auto slice = [&](const Vec& grid, size_t i, size_t j) {
    return Element(grid.begin() + (i * n + j) * k, grid.begin() + (i * n + j) * k + k);
  };
  auto grid_mul = [&](const Vec& x, const Vec& y) {
    Vec out = zero_vec(*a.field(), n * n * k);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Element entry = local.zero();
        for (size_t t = 0; t < n; ++t)
          entry = local.add(entry, local.mul(slice(x, i, t), slice(y, t, j)));
        std::copy(entry.begin(), entry.end(), out.begin() + (i * n + j) * k);
      }
    return out;
  };

  bool mult_ok = true;
  std::string mult_detail;
  for (size_t p = 0; p < d && mult_ok; ++p)
    for (size_t q = 0; q < d && mult_ok; ++q) {
      Vec lhs = iso.apply_forward(a.mul(a.basis(p), a.basis(q)));
      Vec rhs = grid_mul(iso.apply_forward(a.basis(p)), iso.apply_forward(a.basis(q)));
      if (lhs != rhs) {
        mult_ok = false;
        mult_detail = "first failure at basis pair (" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    }
  r.add("multiplicative_on_basis_pairs", mult_ok, mult_detail);

  Vec phi_one = iso.apply_forward(a.unity());
  Vec identity_grid = zero_vec(*a.field(), n * n * k);
  for (size_t i = 0; i < n; ++i)
    for (size_t c = 0; c < k; ++c)
      identity_grid[(i * n + i) * k + c] = local.unity()[c];
  r.add("unity_to_identity", phi_one == identity_grid);

  bool inverse_ok = true;
  for (size_t m = 0; m < d && inverse_ok; ++m)
    inverse_ok = iso.apply_backward(iso.apply_forward(a.basis(m))) == a.basis(m);
  for (size_t g = 0; g < n * n * k && inverse_ok; ++g) {
    Vec grid = zero_vec(*a.field(), n * n * k);
    grid[g] = a.field()->one();
    inverse_ok = iso.apply_forward(iso.apply_backward(grid)) == grid;
  }
  r.add("mutually_inverse_on_basis", inverse_ok);

  return r;
}

DivisionRingResult verify_division_ring(const CornerAlgebra& c, uint64_t seed) {
  DivisionRingResult out;
  const Algebra& b = c.local;

  bool commutative = true;
  for (size_t i = 0; i < b.dim() && commutative; ++i)
    for (size_t j = i + 1; j < b.dim() && commutative; ++j)
      commutative = b.mul(b.basis(i), b.basis(j)) == b.mul(b.basis(j), b.basis(i));
  out.info.commutative = commutative;

  auto check_one = [&](const Element& x) -> bool {
    auto w = try_invert(b, x);
    if (!w) {
      out.not_invertible = x;
      return false;
    }
    // the inverse of the inverse must come back to x
    auto back = try_invert(b, *w);
    if (!back || *back != x) {
      out.not_invertible = x;
      return false;
    }
    ++out.info.inverted;
    return true;
  };

  bool ok = true;
  if (auto count = element_count(b, kEnumerationLimit)) {
    out.info.exhaustive = true;
    for (uint64_t idx = 1; idx < *count && ok; ++idx) ok = check_one(local_element(b, idx));
    out.report.add("division_ring_exhaustive", ok,
                   ok ? std::to_string(out.info.inverted) + " nonzero elements inverted"
                      : "non-invertible element " + vec_str(*b.field(), *out.not_invertible));
  } else {
    out.info.exhaustive = false;
    Rng rng(seed);
    for (size_t i = 0; i < b.dim() && ok; ++i) ok = check_one(b.basis(i));
    for (int trial = 0; trial < 64 && ok; ++trial) {
      Element x(b.dim());
      for (auto& coord : x) coord = b.field()->sample(rng);
      if (b.is_zero(x)) continue;
      ok = check_one(x);
    }
    out.report.add("division_ring_sampled", ok,
                   ok ? std::to_string(out.info.inverted) + " elements inverted (basis + samples)"
                      : "non-invertible element " + vec_str(*b.field(), *out.not_invertible));
  }
  return out;
}

Report verify_not_prime_witness(const Algebra& a, const Element& wa, const Element& wb) {
  Report r;
  if (wa.size() != a.dim() || wb.size() != a.dim())
    throw DimensionMismatch("witness coordinates have wrong length");
  r.add("witness_a_nonzero", !vec_is_zero(wa));
  r.add("witness_b_nonzero", !vec_is_zero(wb));
  bool swept = true;
  std::string detail;
  for (size_t i = 0; i < a.dim() && swept; ++i) {
    if (!vec_is_zero(a.mul(a.mul(wa, a.basis(i)), wb))) {
      swept = false;
      detail = "a x_" + std::to_string(i) + " b != 0";
    }
  }
  r.add("witness_annihilates", swept, detail);
  return r;
}

PrimeProbe prime_equivalence_probe(const Algebra& a) {
  PrimeProbe probe;
  auto count = element_count(a, uint64_t{1} << 12);
  if (!count) throw TooLarge("probe needs |F|^dim <= 2^12");

  // element level: exhaustive search for aRb = {0} with a, b nonzero
  for (uint64_t ia = 1; ia < *count && !probe.element_level_witness; ++ia) {
    Element wa = local_element(a, ia);
    for (uint64_t ib = 1; ib < *count && !probe.element_level_witness; ++ib) {
      Element wb = local_element(a, ib);
      bool all_zero = true;
      for (size_t i = 0; i < a.dim() && all_zero; ++i)
        all_zero = vec_is_zero(a.mul(a.mul(wa, a.basis(i)), wb));
      probe.element_level_witness = all_zero;
    }
  }

  // ideal level: every left ideal arises as a sum of principal ones
  std::vector<Subspace> ideals;
  auto push_unique = [&](const Subspace& s) {
    for (const auto& t : ideals)
      if (t == s) return false;
    ideals.push_back(s);
    return true;
  };
  for (uint64_t idx = 0; idx < *count; ++idx)
    push_unique(left_ideal_generated(a, {local_element(a, idx)}).space);
  for (bool grew = true; grew;) {
    grew = false;
    const size_t m = ideals.size();
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j)
        if (push_unique(ideals[i].sum(ideals[j]))) grew = true;
  }
  probe.left_ideal_count = ideals.size();

  for (const auto& i : ideals) {
    if (i.is_zero()) continue;
    for (const auto& j : ideals) {
      if (j.is_zero()) continue;
      if (ideal_product(a, LeftIdeal{i}, LeftIdeal{j}).is_zero()) {
        probe.ideal_level_witness = true;
        break;
      }
    }
    if (probe.ideal_level_witness) break;
  }

  probe.report.add("left_ideals_enumerated", true, std::to_string(ideals.size()) + " left ideals");
  probe.report.add("element_ideal_agreement",
                   probe.element_level_witness == probe.ideal_level_witness,
                   std::string("element-level witness ") +
                       (probe.element_level_witness ? "exists" : "absent") + ", ideal-level witness " +
                       (probe.ideal_level_witness ? "exists" : "absent"));
  return probe;
}

Report verify_certificate(const Algebra& a, const Certificate& cert, uint64_t seed) {
  Report r;
  if (const auto* d = std::get_if<Decomposed>(&cert)) {
    if (d->idempotents.size() != d->units.n)
      throw DimensionMismatch("idempotent count does not match unit grid");
    bool diag_ok = true;
    for (size_t i = 0; i < d->units.n; ++i)
      diag_ok = diag_ok && d->units.at(i, i) == d->idempotents[i];
    r.add("diagonal_matches_idempotents", diag_ok);
    bool orth_ok = true;
    for (size_t i = 0; i < d->idempotents.size() && orth_ok; ++i)
      for (size_t j = 0; j < d->idempotents.size() && orth_ok; ++j) {
        const Element expected = i == j ? d->idempotents[i] : a.zero();
        orth_ok = a.mul(d->idempotents[i], d->idempotents[j]) == expected;
      }
    r.add("idempotents_orthogonal", orth_ok);
    r.merge(verify_matrix_units(a, d->units));
    r.merge(verify_isomorphism(a, d->iso));
    DivisionRingResult dr = verify_division_ring(d->iso.corner, seed);
    r.merge(dr.report);
    r.add("division_ring_flags_match",
          dr.info.exhaustive == d->division_ring.exhaustive &&
              dr.info.commutative == d->division_ring.commutative,
          "recomputed mode/commutativity agree with the certificate");
  } else {
    const auto& w = std::get<NotPrimeWitness>(cert);
    r.merge(verify_not_prime_witness(a, w.a, w.b));
  }
  return r;
}

std::string render(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += c.pass ? "  [pass] " : "  [FAIL] ";
    out += c.name;
    if (!c.detail.empty()) {
      out += ": ";
      out += c.detail;
    }
    out += "\n";
  }
  return out;
}

}  // namespace artin
