#include "pontryagin/field.hpp"

#include <charconv>
#include <stdexcept>

#include "pontryagin/errors.hpp"

namespace pontryagin {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n && d < (1ULL << 32); ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw PresentationError("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::rationals() { return Field(0); }

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'Z')) {
    std::uint64_t p = 0;
    auto body = text.substr(text[1] == '_' ? 2 : 1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) {
      try {
        return prime(p);
      } catch (const PresentationError&) {
        throw ParseError("field '" + std::string(text) + "': " + std::to_string(p) +
                         " is not prime");
      }
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected F2, F<p> or Q)");
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(modulus_); }

Scalar Field::zero() const { return is_rational() ? Scalar(Rational(0)) : Scalar(std::uint64_t{0}); }

Scalar Field::one() const { return is_rational() ? Scalar(Rational(1)) : Scalar(1 % modulus_); }

Scalar Field::from_int(std::int64_t n) const {
  if (is_rational()) return Scalar(Rational(static_cast<long>(n)));
  auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = n % m;
  if (r < 0) r += m;
  return Scalar(static_cast<std::uint64_t>(r));
}

Scalar Field::from_rational(const Rational& q) const {
  if (is_rational()) {
    Rational c = q;
    c.canonicalize();
    return Scalar(std::move(c));
  }
  mpz_class m(std::to_string(modulus_));
  mpz_class num = q.get_num() % m;
  mpz_class den = q.get_den() % m;
  if (num < 0) num += m;
  if (den < 0) den += m;
  if (den == 0) {
    throw ParseError("denominator of " + q.get_str() + " vanishes in " + name());
  }
  Scalar n(static_cast<std::uint64_t>(std::stoull(num.get_str())));
  Scalar d(static_cast<std::uint64_t>(std::stoull(den.get_str())));
  return div(n, d);
}

bool Field::is_zero(const Scalar& a) const {
  if (is_rational()) return std::get<Rational>(a.value_) == 0;
  return std::get<std::uint64_t>(a.value_) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (is_rational()) return std::get<Rational>(a.value_) == 1;
  return std::get<std::uint64_t>(a.value_) == 1 % modulus_;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(Rational(std::get<Rational>(a.value_) + std::get<Rational>(b.value_)));
  std::uint64_t s = std::get<std::uint64_t>(a.value_) + std::get<std::uint64_t>(b.value_);
  if (s >= modulus_) s -= modulus_;
  return Scalar(s);
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return Scalar(Rational(-std::get<Rational>(a.value_)));
  std::uint64_t v = std::get<std::uint64_t>(a.value_);
  return Scalar(v == 0 ? 0 : modulus_ - v);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(Rational(std::get<Rational>(a.value_) * std::get<Rational>(b.value_)));
  return Scalar(mulmod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_), modulus_));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (is_rational()) return Scalar(Rational(1 / std::get<Rational>(a.value_)));
  return Scalar(powmod(std::get<std::uint64_t>(a.value_), modulus_ - 2, modulus_));
}

Scalar Field::parse_scalar(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw ParseError("empty scalar");
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text = trim(text.substr(1));
  }
  auto slash = text.find('/');
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!digits(num) || !digits(den)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return from_rational(q);
}

std::string Field::format(const Scalar& a) const {
  if (is_rational()) return std::get<Rational>(a.value_).get_str();
  return std::to_string(std::get<std::uint64_t>(a.value_));
}

bool Field::is_negative(const Scalar& a) const {
  return is_rational() && std::get<Rational>(a.value_) < 0;
}

std::uint64_t Field::residue(const Scalar& a) const {
  if (is_rational()) throw std::logic_error("residue() on a rational scalar");
  return std::get<std::uint64_t>(a.value_);
}

const Rational& Field::rational(const Scalar& a) const {
  if (!is_rational()) throw std::logic_error("rational() on a prime-field scalar");
  return std::get<Rational>(a.value_);
}

}  // namespace pontryagin
