#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace pontryagin {

using Rational = mpq_class;

class Field;

/// A coefficient.  Only meaningful together with the Field that produced it:
/// prime-field scalars are residues in [0, p), rational scalars are reduced
/// fractions.
class Scalar {
 public:
  Scalar() = default;

  bool operator==(const Scalar& other) const = default;

 private:
  friend class Field;
  explicit Scalar(std::uint64_t residue) : value_(residue) {}
  explicit Scalar(Rational q) : value_(std::move(q)) {}

  std::variant<std::uint64_t, Rational> value_{std::uint64_t{0}};
};

/// Coefficient field: F_p for a prime p, or the rationals.
class Field {
 public:
  /// Throws PresentationError unless p is prime.
  static Field prime(std::uint64_t p);
  static Field rationals();
  /// Accepts "F2", "F3", ..., "Fp" with p prime, and "Q".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return modulus_; }
  std::string name() const;

  bool operator==(const Field& other) const = default;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  /// Throws ParseError for a fraction whose denominator vanishes in the field.
  Scalar from_rational(const Rational& q) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// (-1)^k in this field.
  Scalar sign(std::int64_t k) const { return (k % 2 == 0) ? one() : neg(one()); }

  /// Integer literal or "a/b".
  Scalar parse_scalar(std::string_view text) const;
  std::string format(const Scalar& a) const;
  /// True when the printed form starts with a minus sign.
  bool is_negative(const Scalar& a) const;

  /// Residue for prime fields; throws std::logic_error over Q.
  std::uint64_t residue(const Scalar& a) const;
  /// The rational value; throws std::logic_error over F_p.
  const Rational& rational(const Scalar& a) const;

 private:
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace pontryagin
