#include <doctest.h>

#include <random>

#include "pontryagin/errors.hpp"
#include "pontryagin/series.hpp"
#include "support.hpp"

using namespace pontryagin;

namespace {

PowerSeries random_series(std::mt19937_64& rng, int n, bool unit) {
  std::vector<std::int64_t> c;
  for (int d = 0; d <= n; ++d) c.push_back(static_cast<std::int64_t>(rng() % 11) - 5);
  if (unit) c[0] = (rng() % 2) ? 1 : -1;
  return PowerSeries(c, n);
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("rational series") {
    PowerSeries w = rational_series({1}, {1, 0, -1, -1, -1}, 12);
    CHECK(w.coeffs() == std::vector<std::int64_t>{1, 0, 1, 1, 2, 2, 4, 5, 8, 11, 17, 24, 36});
    PowerSeries ones = rational_series({1}, {1, -1}, 5);
    CHECK(ones.coeffs() == std::vector<std::int64_t>(6, 1));
    CHECK(rational_series({1, 3, 5, 7, 7, 5, 3, 1}, {1, 0, -1, -1, -1}, 16).coeffs() ==
          testing_support::glambda_f2_dims(16));
    CHECK_THROWS_AS(rational_series({1}, {2, 1}, 4), SeriesError);
  }

  TEST_CASE("james series") {
    PowerSeries v({0, 0, 1, 1, 1}, 12);
    CHECK(james_series(v) == rational_series({1}, {1, 0, -1, -1, -1}, 12));
    CHECK(james_series(PowerSeries(6)) == PowerSeries::constant(1, 6));
    CHECK(james_series(PowerSeries::monomial(1, 1, 6)).coeffs() == std::vector<std::int64_t>(7, 1));
    CHECK_THROWS_AS(james_series(PowerSeries::constant(1, 4)), SeriesError);
  }

  TEST_CASE("truncations align to the minimum") {
    PowerSeries a({1, 1}, 10), b({1, 2, 3}, 4);
    CHECK((a * b).truncation() == 4);
    CHECK((a + b).truncation() == 4);
    CHECK((a * b).coeffs() == std::vector<std::int64_t>{1, 3, 5, 3, 0});
  }

  TEST_CASE("division reports the first failing degree") {
    PowerSeries a({1, 1, 1}, 4), b({2, 1}, 4);
    try {
      (void)(PowerSeries({2, 1, 1}, 4) / b);
      FAIL("expected SeriesError");
    } catch (const SeriesError& e) {
      CHECK(std::string(e.what()).find("degree 2") != std::string::npos);
    }
    CHECK_THROWS_AS(a / PowerSeries({0, 1}, 4), SeriesError);
    CHECK((PowerSeries({2, 1}, 4) * PowerSeries({3, 0, 1}, 4)) / b == PowerSeries({3, 0, 1}, 4));
  }

  TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 200; ++i) {
      PowerSeries a = random_series(rng, 10, false), b = random_series(rng, 10, false), c = random_series(rng, 10, false);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      PowerSeries u = random_series(rng, 10, true);
      CHECK((a / u) * u == a);
    }
  }

  TEST_CASE("overflow is detected") {
    PowerSeries big({INT64_MAX / 2, 0}, 2);
    CHECK_THROWS_AS(big * PowerSeries({3}, 2), SeriesError);
    CHECK_THROWS_AS(big + big + big, SeriesError);
  }

  TEST_CASE("series of presets") {
    Field f2 = Field::prime(2);
    CHECK(series_of(compile(preset_presentation("so3", f2)), 5).coeffs() ==
          std::vector<std::int64_t>{1, 1, 1, 1, 0, 0});
    CHECK(series_of(compile(preset_presentation("k1", f2)), 5).coeffs() ==
          std::vector<std::int64_t>{1, 2, 2, 2, 1, 0});
    CHECK(series_of(compile(preset_presentation("glambda", f2)), 16).coeffs() == testing_support::glambda_f2_dims(16));
    CHECK(oracle_series(preset_presentation("glambda", f2), 6) ==
          series_of(compile(preset_presentation("glambda", f2)), 6));
    CHECK(series_of(std::get<BasisSchema>(preset("u0_model", f2)), 16) == rational_series({1, 1}, {1, 0, -1, -1, -1}, 16));
  }

  TEST_CASE("expression language") {
    auto eval = [](const char* text, int n = 8) { return evaluate_series(text, n, nullptr).coeffs(); };
    CHECK(eval("(1+q^2)", 4) == std::vector<std::int64_t>{1, 0, 1, 0, 0});
    CHECK(eval("1/(1-q)", 3) == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(eval("-q + 2*q^2 - (1)", 3) == std::vector<std::int64_t>{-1, -1, 2, 0});
    CHECK(eval("james(q^2+q^3+q^4)", 8) == std::vector<std::int64_t>{1, 0, 1, 1, 2, 2, 4, 5, 8});
    CHECK(eval("(1+q)^3*(1+q^2)^2/(1-q^2-q^3-q^4)", 16) == testing_support::glambda_f2_dims(16));
    CHECK_THROWS_AS(eval("1 +"), ParseError);
    CHECK_THROWS_AS(eval("(1+q"), ParseError);
    CHECK_THROWS_AS(eval("p"), ParseError);
    CHECK_THROWS_AS(eval("algebra(glambda)"), ParseError);
    AlgebraResolver r = [](const std::string& name, int n) {
      return series_of(compile(preset_presentation(name, Field::prime(2))), n);
    };
    CHECK(evaluate_series("algebra(glambda) / algebra(k0)", 10, r) == rational_series({1, 1}, {1, 0, -1, -1, -1}, 10));
  }

  TEST_CASE("fibration identities") { CHECK(check_fibration_identities(16).passed()); }

  TEST_CASE("product model") {
    for (const char* fname : {"F2", "F3", "F5", "Q"}) {
      CAPTURE(fname);
      CHECK(check_homotopy_model(16, Field::parse(fname)).passed());
    }
  }
}
