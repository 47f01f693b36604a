#include "artin/field.hpp"

#include <algorithm>
#include <cassert>

namespace artin {

namespace {

// ---- residue arithmetic, p < 2^31 so products fit in uint64 ----

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) { return (a + b) % p; }
uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b) % p; }
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

uint64_t inv_mod(uint64_t a, uint64_t p) {
  if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p));
  int64_t t = 0, new_t = 1;
  int64_t r = int64_t(p), new_r = int64_t(a);
  while (new_r != 0) {
    int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  assert(r == 1);
  return uint64_t(t < 0 ? t + int64_t(p) : t);
}

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- variable-length polynomials over F_p, low degree first ----

using Poly = std::vector<uint64_t>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  poly_trim(out);
  return out;
}

// Remainder of a by monic-normalized b (b need not be monic).
Poly poly_rem(Poly a, const Poly& b, uint64_t p) {
  poly_trim(a);
  const uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    uint64_t q = mul_mod(a.back(), lead_inv, p);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = sub_mod(a[shift + i], mul_mod(q, b[i], p), p);
    poly_trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^e mod f by square-and-multiply; e may be huge (p^deg).
Poly poly_pow_x(const mpz_class& e, const Poly& f, uint64_t p) {
  Poly result{1};
  Poly base{0, 1};
  base = poly_rem(base, f, p);
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = poly_rem(poly_mul(result, base, p), f, p);
    base = poly_rem(poly_mul(base, base, p), f, p);
    n >>= 1;
  }
  return result;
}

// Irreducibility of a monic f over F_p. Exhaustive monic-divisor search while
// the candidate count stays desk-sized; deterministic Rabin test beyond that.
bool poly_irreducible(const Poly& f, uint64_t p) {
  const size_t deg = f.size() - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;

  double candidates = 1;
  for (size_t i = 0; i < deg / 2; ++i) candidates *= double(p);
  if (candidates <= double(1u << 16)) {
    // enumerate monic divisors of degree 1 .. deg/2
    for (size_t d = 1; d <= deg / 2; ++d) {
      uint64_t count = 1;
      for (size_t i = 0; i < d; ++i) count *= p;
      for (uint64_t idx = 0; idx < count; ++idx) {
        Poly g(d + 1, 0);
        uint64_t x = idx;
        for (size_t i = 0; i < d; ++i) {
          g[i] = x % p;
          x /= p;
        }
        g[d] = 1;
        if (poly_rem(f, g, p).empty()) return false;
      }
    }
    return true;
  }

  // Rabin: f irreducible iff x^(p^deg) = x mod f and for every prime q | deg,
  // gcd(x^(p^(deg/q)) - x, f) is constant.
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, deg);
  Poly xp = poly_pow_x(pk, f, p);
  Poly x{0, 1};
  Poly diff = poly_rem(xp, f, p);
  // diff - x
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = sub_mod(diff[1], 1, p);
  poly_trim(diff);
  if (!diff.empty()) return false;
  for (size_t q = 2; q <= deg; ++q) {
    if (deg % q != 0 || !is_prime_u32(uint32_t(q))) continue;
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, deg / q);
    Poly sub = poly_pow_x(e, f, p);
    if (sub.size() < 2) sub.resize(2, 0);
    sub[1] = sub_mod(sub[1], 1, p);
    poly_trim(sub);
    Poly g = poly_gcd(f, sub, p);
    if (g.size() > 1) return false;
  }
  return true;
}

Poly to_poly(const ExtPoly& c) {
  Poly out(c.begin(), c.end());
  poly_trim(out);
  return out;
}

ExtPoly to_fixed(const Poly& a, size_t deg) {
  ExtPoly out(deg, 0);
  for (size_t i = 0; i < a.size() && i < deg; ++i) out[i] = uint32_t(a[i]);
  return out;
}

mpq_class rat_of(int64_t n) { return mpq_class(long(n)); }

}  // namespace

bool scalar_is_zero(const Scalar& a) {
  if (a.is_residue()) return a.residue() == 0;
  if (a.is_coeffs()) {
    for (uint32_t c : a.coeffs())
      if (c != 0) return false;
    return true;
  }
  return sgn(a.rat()) == 0;
}

bool scalar_is_one(const Scalar& a) {
  if (a.is_residue()) return a.residue() == 1;
  if (a.is_coeffs()) {
    const auto& c = a.coeffs();
    if (c.empty() || c[0] != 1) return false;
    for (size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) return false;
    return true;
  }
  return a.rat() == 1;
}

FieldPtr Field::prime(uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw InvalidField("p must be a prime below 2^31, got " + std::to_string(p));
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Prime;
  f->p_ = p;
  f->deg_ = 1;
  return f;
}

FieldPtr Field::extension(uint32_t p, ExtPoly modulus) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw InvalidField("p must be a prime below 2^31, got " + std::to_string(p));
  if (modulus.size() < 3 || modulus.size() > 9)
    throw InvalidField("extension degree must be between 2 and 8");
  for (auto& c : modulus)
    if (c >= p) throw InvalidField("modulus coefficients must be reduced mod p");
  if (modulus.back() != 1) throw InvalidField("modulus must be monic");
  if (!poly_irreducible(to_poly(modulus), p))
    throw InvalidField("modulus is reducible over F_" + std::to_string(p));
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Extension;
  f->p_ = p;
  f->deg_ = uint32_t(modulus.size() - 1);
  f->modulus_ = std::move(modulus);
  return f;
}

FieldPtr Field::rationals() {
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Rational;
  return f;
}

Scalar Field::zero() const {
  switch (kind_) {
    case Kind::Prime: return Scalar(uint64_t{0});
    case Kind::Extension: return Scalar(ExtPoly(deg_, 0));
    case Kind::Rational: return Scalar(mpq_class(0));
  }
  return {};
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(int64_t n) const {
  switch (kind_) {
    case Kind::Prime: {
      int64_t r = n % int64_t(p_);
      if (r < 0) r += p_;
      return Scalar(uint64_t(r));
    }
    case Kind::Extension: {
      ExtPoly c(deg_, 0);
      int64_t r = n % int64_t(p_);
      if (r < 0) r += p_;
      c[0] = uint32_t(r);
      return Scalar(std::move(c));
    }
    case Kind::Rational: return Scalar(rat_of(n));
  }
  return {};
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Prime: return Scalar(add_mod(a.residue(), b.residue(), p_));
    case Kind::Extension: {
      ExtPoly out(deg_);
      for (size_t i = 0; i < deg_; ++i) out[i] = uint32_t(add_mod(a.coeffs()[i], b.coeffs()[i], p_));
      return Scalar(std::move(out));
    }
    case Kind::Rational: return Scalar(mpq_class(a.rat() + b.rat()));
  }
  return {};
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Prime: return Scalar(sub_mod(a.residue(), b.residue(), p_));
    case Kind::Extension: {
      ExtPoly out(deg_);
      for (size_t i = 0; i < deg_; ++i) out[i] = uint32_t(sub_mod(a.coeffs()[i], b.coeffs()[i], p_));
      return Scalar(std::move(out));
    }
    case Kind::Rational: return Scalar(mpq_class(a.rat() - b.rat()));
  }
  return {};
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Prime: return Scalar(mul_mod(a.residue(), b.residue(), p_));
    case Kind::Extension: {
      Poly prod = poly_mul(to_poly(a.coeffs()), to_poly(b.coeffs()), p_);
      return Scalar(to_fixed(poly_rem(prod, to_poly(modulus_), p_), deg_));
    }
    case Kind::Rational: return Scalar(mpq_class(a.rat() * b.rat()));
  }
  return {};
}

Scalar Field::neg(const Scalar& a) const { return sub(zero(), a); }

Scalar Field::inv(const Scalar& a) const {
  switch (kind_) {
    case Kind::Prime: return Scalar(inv_mod(a.residue(), p_));
    case Kind::Extension: {
      if (scalar_is_zero(a)) throw DivisionByZero("inverse of 0 in " + name());
      // extended Euclid in F_p[t]: u*a + v*modulus = 1
      Poly r0 = to_poly(modulus_), r1 = to_poly(a.coeffs());
      Poly s0{}, s1{1};
      while (!r1.empty()) {
        // division step: r0 = q*r1 + r
        Poly q;
        {
          Poly a0 = r0;
          const uint64_t lead_inv = inv_mod(r1.back(), p_);
          q.assign(a0.size() >= r1.size() ? a0.size() - r1.size() + 1 : 0, 0);
          while (a0.size() >= r1.size() && !a0.empty()) {
            uint64_t c = mul_mod(a0.back(), lead_inv, p_);
            size_t shift = a0.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
              a0[shift + i] = sub_mod(a0[shift + i], mul_mod(c, r1[i], p_), p_);
            poly_trim(a0);
          }
          r0.swap(a0);  // r0 now the remainder
        }
        r0.swap(r1);
        // s update: s_next = s0 - q*s1
        Poly qs = poly_mul(q, s1, p_);
        Poly s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
          uint64_t x = i < s0.size() ? s0[i] : 0;
          uint64_t y = i < qs.size() ? qs[i] : 0;
          s2[i] = sub_mod(x, y, p_);
        }
        poly_trim(s2);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // r0 is the gcd (a constant, since modulus is irreducible)
      assert(r0.size() == 1);
      uint64_t scale = inv_mod(r0[0], p_);
      Poly u = s0;
      for (auto& c : u) c = mul_mod(c, scale, p_);
      return Scalar(to_fixed(poly_rem(u, to_poly(modulus_), p_), deg_));
    }
    case Kind::Rational: {
      if (sgn(a.rat()) == 0) throw DivisionByZero("inverse of 0 in Q");
      return Scalar(mpq_class(1 / a.rat()));
    }
  }
  return {};
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::optional<uint64_t> Field::order_at_most(uint64_t limit) const {
  if (kind_ == Kind::Rational) return std::nullopt;
  uint64_t n = 1;
  for (uint32_t i = 0; i < deg_; ++i) {
    if (n > limit / p_) return std::nullopt;
    n *= p_;
  }
  if (n > limit) return std::nullopt;
  return n;
}

Scalar Field::element(uint64_t idx) const {
  switch (kind_) {
    case Kind::Prime: return Scalar(idx % p_);
    case Kind::Extension: {
      ExtPoly c(deg_, 0);
      for (uint32_t i = 0; i < deg_; ++i) {
        c[i] = uint32_t(idx % p_);
        idx /= p_;
      }
      return Scalar(std::move(c));
    }
    case Kind::Rational: throw Error("cannot enumerate Q");
  }
  return {};
}

Scalar Field::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::Prime: return Scalar(rng.below(p_));
    case Kind::Extension: {
      ExtPoly c(deg_);
      for (auto& x : c) x = uint32_t(rng.below(p_));
      return Scalar(std::move(c));
    }
    case Kind::Rational: return Scalar(mpq_class(long(rng.below(5)) - 2));
  }
  return {};
}

std::string Field::str(const Scalar& a) const {
  switch (kind_) {
    case Kind::Prime: return std::to_string(a.residue());
    case Kind::Extension: {
      std::string out = "[";
      for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a.coeffs()[i]);
      }
      return out + "]";
    }
    case Kind::Rational: return a.rat().get_str();
  }
  return {};
}

std::string Field::name() const {
  switch (kind_) {
    case Kind::Prime: return "F_" + std::to_string(p_);
    case Kind::Extension: return "F_" + std::to_string(p_) + "^" + std::to_string(deg_);
    case Kind::Rational: return "Q";
  }
  return {};
}

Vec zero_vec(const Field& f, size_t n) { return Vec(n, f.zero()); }

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, const Scalar& s, const Vec& a) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!scalar_is_zero(x)) return false;
  return true;
}

}  // namespace artin
