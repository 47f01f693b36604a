#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "artin/error.hpp"
#include "artin/rng.hpp"

namespace artin {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Polynomial coefficients over F_p, lowest degree first, each in [0, p).
using ExtPoly = std::vector<uint32_t>;

/// One element of a fixed field, in canonical form: a residue in [0,p) for
/// prime fields, a coefficient vector of length deg for extension fields, a
/// reduced fraction with positive denominator for the rationals. The active
/// alternative must match the field the scalar is used with; all arithmetic
/// goes through Field, which supplies the context.
class Scalar {
public:
  Scalar() : v_(uint64_t{0}) {}
  explicit Scalar(uint64_t residue) : v_(residue) {}
  explicit Scalar(ExtPoly coeffs) : v_(std::move(coeffs)) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  uint64_t residue() const { return std::get<uint64_t>(v_); }
  const ExtPoly& coeffs() const { return std::get<ExtPoly>(v_); }
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }

  bool is_residue() const { return std::holds_alternative<uint64_t>(v_); }
  bool is_coeffs() const { return std::holds_alternative<ExtPoly>(v_); }
  bool is_rat() const { return std::holds_alternative<mpq_class>(v_); }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(v_ == o.v_); }

private:
  std::variant<uint64_t, ExtPoly, mpq_class> v_;
};

using Vec = std::vector<Scalar>;

bool scalar_is_zero(const Scalar&);
bool scalar_is_one(const Scalar&);

/// Exact base field: F_p (p prime, p < 2^31), F_{p^deg} presented as
/// F_p[t]/(modulus) with 2 <= deg <= 8 and modulus monic irreducible, or Q.
class Field {
public:
  enum class Kind { Prime, Extension, Rational };

  static FieldPtr prime(uint32_t p);
  static FieldPtr extension(uint32_t p, ExtPoly modulus);
  static FieldPtr rationals();

  Kind kind() const { return kind_; }
  uint32_t p() const { return p_; }
  uint32_t deg() const { return deg_; }
  const ExtPoly& modulus() const { return modulus_; }
  bool same(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && deg_ == o.deg_ && modulus_ == o.modulus_;
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(int64_t n) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;  // throws DivisionByZero
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws DivisionByZero

  /// Field order if finite and at most limit.
  std::optional<uint64_t> order_at_most(uint64_t limit) const;
  /// idx-th element in counting order (prime: the residue idx; extension:
  /// base-p digits of idx, low coefficient first). Finite fields only.
  Scalar element(uint64_t idx) const;
  /// Uniform draw over a finite field; over Q an integer from {-2,...,2}
  /// (small numerators keep exact solves fast; see the sampling policy in
  /// the ideal-descent code).
  Scalar sample(Rng& rng) const;

  std::string str(const Scalar& a) const;
  /// Compact field descriptor for report lines: F_5, F_2^3, Q.
  std::string name() const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

private:
  Field() = default;

  Kind kind_ = Kind::Rational;
  uint32_t p_ = 0;
  uint32_t deg_ = 1;
  ExtPoly modulus_;
};

inline void require_same_field(const Field& a, const Field& b) {
  if (!a.same(b)) throw FieldMismatch("operands belong to different fields");
}

Vec zero_vec(const Field& f, size_t n);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Scalar& s, const Vec& a);
bool vec_is_zero(const Vec& a);

}  // namespace artin
