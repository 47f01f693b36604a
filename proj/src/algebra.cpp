#include "artin/algebra.hpp"

namespace artin {

Algebra::Algebra(FieldPtr field, size_t dim, std::vector<Scalar> table, Element unity)
    : field_(std::move(field)), dim_(dim), table_(std::move(table)), unity_(std::move(unity)) {
  if (dim_ == 0) throw DimensionMismatch("algebra dimension must be at least 1");
  if (table_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("structure table has wrong arity");
  if (unity_.size() != dim_) throw DimensionMismatch("unity coordinate length does not match dim");
}

Element Algebra::basis(size_t i) const {
  Element e = zero();
  e[i] = field_->one();
  return e;
}

Element Algebra::mul(const Element& a, const Element& b) const {
  if (a.size() != dim_ || b.size() != dim_)
    throw DimensionMismatch("element length does not match algebra dimension");
  const Field& f = *field_;
  Element out = zero();
  for (size_t i = 0; i < dim_; ++i) {
    if (scalar_is_zero(a[i])) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (scalar_is_zero(b[j])) continue;
      const Scalar s = f.mul(a[i], b[j]);
      const size_t base = (i * dim_ + j) * dim_;
      for (size_t k = 0; k < dim_; ++k) {
        const Scalar& coeff = table_[base + k];
        if (!scalar_is_zero(coeff)) out[k] = f.add(out[k], f.mul(s, coeff));
      }
    }
  }
  return out;
}

ValidationReport validate(const Algebra& a) {
  const size_t d = a.dim();
  ValidationReport report;
  // exhaustive associativity: (x_i x_j) x_k = x_i (x_j x_k) for all triples
  for (size_t i = 0; i < d; ++i) {
    Element xi = a.basis(i);
    for (size_t j = 0; j < d; ++j) {
      Element xij = a.mul(xi, a.basis(j));
      for (size_t k = 0; k < d; ++k) {
        Element lhs = a.mul(xij, a.basis(k));
        Element rhs = a.mul(xi, a.mul(a.basis(j), a.basis(k)));
        if (lhs != rhs) report.not_associative.push_back({i, j, k});
      }
    }
  }
  report.found_unity = find_unity(a.field(), d, a.table());
  if (!report.found_unity) {
    report.unity = ValidationReport::Unity::NoUnity;
  } else if (*report.found_unity != a.unity()) {
    report.unity = ValidationReport::Unity::WrongUnity;
  }
  return report;
}

std::optional<Element> find_unity(const FieldPtr& field, size_t dim,
                                  const std::vector<Scalar>& table) {
  const Field& f = *field;
  auto c = [&](size_t i, size_t j, size_t k) -> const Scalar& {
    return table[(i * dim + j) * dim + k];
  };
  // unknowns u_j; conditions sum_j u_j c(j,i,k) = delta_ik and
  // sum_j u_j c(i,j,k) = delta_ik for all i,k
  Matrix A(field, 2 * dim * dim, dim);
  Vec b = zero_vec(f, 2 * dim * dim);
  size_t row = 0;
  for (size_t i = 0; i < dim; ++i)
    for (size_t k = 0; k < dim; ++k) {
      for (size_t j = 0; j < dim; ++j) A.at(row, j) = c(j, i, k);
      b[row] = i == k ? f.one() : f.zero();
      ++row;
      for (size_t j = 0; j < dim; ++j) A.at(row, j) = c(i, j, k);
      b[row] = i == k ? f.one() : f.zero();
      ++row;
    }
  return solve(A, b);
}

Algebra matrix_algebra(size_t n, FieldPtr field) {
  if (n == 0) throw DimensionMismatch("matrix algebra needs n >= 1");
  const size_t d = n * n;
  const Field& f = *field;
  std::vector<Scalar> table(d * d * d, f.zero());
  auto idx = [n](size_t r, size_t c) { return r * n + c; };
  // E_ij * E_kl = delta_jk E_il
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
          if (j == k) table[(idx(i, j) * d + idx(k, l)) * d + idx(i, l)] = f.one();
  Element unity = zero_vec(f, d);
  for (size_t i = 0; i < n; ++i) unity[idx(i, i)] = f.one();
  return Algebra(std::move(field), d, std::move(table), std::move(unity));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  require_same_field(*a.field(), *b.field());
  const Field& f = *a.field();
  const size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<Scalar> table(d * d * d, f.zero());
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j)
      for (size_t k = 0; k < da; ++k) table[(i * d + j) * d + k] = a.c(i, j, k);
  for (size_t i = 0; i < db; ++i)
    for (size_t j = 0; j < db; ++j)
      for (size_t k = 0; k < db; ++k)
        table[((da + i) * d + (da + j)) * d + (da + k)] = b.c(i, j, k);
  Element unity = zero_vec(f, d);
  for (size_t i = 0; i < da; ++i) unity[i] = a.unity()[i];
  for (size_t i = 0; i < db; ++i) unity[da + i] = b.unity()[i];
  return Algebra(a.field(), d, std::move(table), std::move(unity));
}

Algebra group_algebra_cyclic(size_t m, FieldPtr field) {
  if (m == 0) throw DimensionMismatch("cyclic group order must be at least 1");
  const Field& f = *field;
  std::vector<Scalar> table(m * m * m, f.zero());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) table[(i * m + j) * m + (i + j) % m] = f.one();
  Element unity = zero_vec(f, m);
  unity[0] = f.one();
  return Algebra(std::move(field), m, std::move(table), std::move(unity));
}

Algebra quaternion_algebra() {
  FieldPtr field = Field::rationals();
  const Field& f = *field;
  const size_t d = 4;
  std::vector<Scalar> table(d * d * d, f.zero());
  auto set = [&](size_t i, size_t j, size_t k, int64_t v) {
    table[(i * d + j) * d + k] = f.from_int(v);
  };
  // basis 1, i, j, k
  for (size_t i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    if (i != 0) set(i, 0, i, 1);
  }
  set(1, 1, 0, -1);
  set(2, 2, 0, -1);
  set(3, 3, 0, -1);
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(2, 3, 1, 1);
  set(3, 2, 1, -1);
  set(3, 1, 2, 1);
  set(1, 3, 2, -1);
  Element unity = zero_vec(f, d);
  unity[0] = f.one();
  return Algebra(std::move(field), d, std::move(table), std::move(unity));
}

Algebra change_of_basis(const Algebra& a, const Matrix& p) {
  require_same_field(*a.field(), *p.field());
  const size_t d = a.dim();
  if (p.rows() != d || p.cols() != d) throw DimensionMismatch("basis change matrix must be d x d");
  Matrix p_inv = inverse(p);  // throws SingularMatrix
  std::vector<Scalar> table;
  table.reserve(d * d * d);
  for (size_t i = 0; i < d; ++i) {
    const Vec yi = p.row(i);
    for (size_t j = 0; j < d; ++j) {
      // y_i y_j expressed in the old basis, then transported to the new one
      Element prod = a.mul(yi, p.row(j));
      Vec in_new = vec_times_matrix(prod, p_inv);
      table.insert(table.end(), in_new.begin(), in_new.end());
    }
  }
  Element unity = vec_times_matrix(a.unity(), p_inv);
  return Algebra(a.field(), d, std::move(table), std::move(unity));
}

Algebra restrict_scalars(const Algebra& a) {
  const Field& ext = *a.field();
  if (ext.kind() != Field::Kind::Extension)
    throw FieldMismatch("restrict_scalars expects an extension-field algebra");
  FieldPtr base = Field::prime(ext.p());
  const Field& f = *base;
  const size_t d = a.dim(), k = ext.deg(), dd = d * k;
  // index (i, s) -> i*k + s for basis t^s x_i
  std::vector<Scalar> table(dd * dd * dd, f.zero());
  Scalar t = [&] {
    ExtPoly c(k, 0);
    c[1] = 1;
    return Scalar(std::move(c));
  }();
  for (size_t i = 0; i < d; ++i)
    for (size_t s = 0; s < k; ++s)
      for (size_t j = 0; j < d; ++j)
        for (size_t r = 0; r < k; ++r) {
          // (t^s x_i)(t^r x_j) = sum_m (t^{s+r} c(i,j,m)) x_m
          Scalar factor = ext.one();
          for (size_t q = 0; q < s + r; ++q) factor = ext.mul(factor, t);
          for (size_t m = 0; m < d; ++m) {
            Scalar coeff = ext.mul(factor, a.c(i, j, m));
            const auto& digits = coeff.coeffs();
            for (size_t u = 0; u < k; ++u)
              if (digits[u] != 0)
                table[((i * k + s) * dd + (j * k + r)) * dd + (m * k + u)] = Scalar(uint64_t(digits[u]));
          }
        }
  Element unity = zero_vec(f, dd);
  for (size_t i = 0; i < d; ++i) {
    const auto& digits = a.unity()[i].coeffs();
    for (size_t u = 0; u < k; ++u) unity[i * k + u] = Scalar(uint64_t(digits[u]));
  }
  return Algebra(std::move(base), dd, std::move(table), std::move(unity));
}

Matrix random_invertible_matrix(FieldPtr field, size_t n, Rng& rng) {
  for (;;) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m.at(i, j) = field->sample(rng);
    if (try_inverse(m)) return m;
  }
}

Algebra scramble(const Algebra& a, uint64_t seed, Matrix* used) {
  Rng rng(seed);
  Matrix p = random_invertible_matrix(a.field(), a.dim(), rng);
  if (used) *used = p;
  return change_of_basis(a, p);
}

}  // namespace artin
