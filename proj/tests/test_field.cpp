#include <doctest.h>

#include <stdexcept>

#include "pontryagin/errors.hpp"
#include "pontryagin/field.hpp"

using namespace pontryagin;

TEST_SUITE("field") {
  TEST_CASE("parse field names") {
    CHECK(Field::parse("F2").characteristic() == 2);
    CHECK(Field::parse("F7").name() == "F7");
    CHECK(Field::parse("Z_5").characteristic() == 5);
    CHECK(Field::parse("Q").is_rational());
    CHECK(Field::parse("Q").characteristic() == 0);
    CHECK_THROWS_AS(Field::parse("F4"), ParseError);
    CHECK_THROWS_AS(Field::parse("R"), ParseError);
    CHECK_THROWS_AS(Field::prime(9), PresentationError);
  }

  TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(5);
    Scalar three = f.from_int(3), four = f.from_int(4);
    CHECK(f.format(f.add(three, four)) == "2");
    CHECK(f.format(f.sub(three, four)) == "4");
    CHECK(f.format(f.mul(three, four)) == "2");
    CHECK(f.format(f.inv(three)) == "2");
    CHECK(f.format(f.from_int(-1)) == "4");
    CHECK(f.is_one(f.mul(four, f.inv(four))));
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
    CHECK(f.format(f.parse_scalar("1/2")) == "3");
    CHECK_THROWS_AS(f.parse_scalar("1/5"), ParseError);
  }

  TEST_CASE("characteristic two erases signs") {
    Field f = Field::prime(2);
    CHECK(f.sign(1) == f.one());
    CHECK(f.neg(f.one()) == f.one());
    CHECK(f.is_zero(f.add(f.one(), f.one())));
  }

  TEST_CASE("rational arithmetic") {
    Field q = Field::rationals();
    Scalar a = q.parse_scalar("2/6");
    CHECK(q.format(a) == "1/3");
    CHECK(q.format(q.add(a, q.parse_scalar("-1/6"))) == "1/6");
    CHECK(q.format(q.parse_scalar("-3")) == "-3");
    CHECK(q.is_negative(q.from_int(-2)));
    CHECK(q.format(q.inv(q.from_int(-4))) == "-1/4");
    CHECK(q.sign(3) == q.from_int(-1));
    CHECK_THROWS_AS(q.parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(q.parse_scalar("x"), ParseError);
  }

  TEST_CASE("field inverses exhaustive for small primes") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      Field f = Field::prime(p);
      for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) {
        CHECK(f.is_one(f.mul(f.from_int(a), f.inv(f.from_int(a)))));
      }
    }
  }
}
