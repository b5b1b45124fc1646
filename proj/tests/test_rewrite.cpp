#include <doctest.h>

#include <random>

#include "pontryagin/errors.hpp"
#include "pontryagin/rewrite.hpp"
#include "support.hpp"

using namespace pontryagin;

namespace {

std::string nf(const RewriteSystem& rs, const char* text) {
  return to_string(normal_form(rs, parse_element(text, rs.field(), rs.table())));
}

std::vector<std::string> basis(const RewriteSystem& rs, int d) {
  std::vector<std::string> out;
  for (const auto& w : basis_words(rs, d)) out.push_back(format_word(*rs.table(), w));
  return out;
}

}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("glambda over F2: derived letters and normal forms") {
    RewriteSystem rs = compile(preset_presentation("glambda", Field::prime(2)));
    CHECK(rs.derived_letters() == 3);
    CHECK(rs.table()->name(0) == "w1");
    CHECK(rs.table()->degree(0) == 2);
    CHECK(rs.table()->degree(2) == 4);
    CHECK(nf(rs, "x1*t") == "w1 + t*x1");
    CHECK(nf(rs, "x2*t") == "w2 + t*x2");
    CHECK(nf(rs, "x1*w2") == "w1*x2 + w3");
    CHECK(nf(rs, "t*t") == "0");
    CHECK(nf(rs, "x1*x2*t") == "w3 + t*x1*x2");
    CHECK(nf(rs, "x2*x1") == "x1*x2");
    CHECK(nf(rs, "y2*t*y1") == "t*y1*y2");
    CHECK(nf(rs, "t*w1") == "w1*t");
    CHECK(nf(rs, "x1*t + t*x1") == "w1");
    CHECK(nf(rs, "w2*w1") == "w2*w1");
  }

  TEST_CASE("embedding of derived letters") {
    RewriteSystem rs = compile(preset_presentation("glambda", Field::prime(2)));
    CHECK(to_string(rs.embedding(0)) == "t*x1 + x1*t");
    CHECK(to_string(rs.embedding(2)) == "t*x1*x2 + x1*x2*t");
    CHECK(to_string(rs.embed(parse_element("w1 + t", rs.field(), rs.table()))) == "t + t*x1 + x1*t");
  }

  TEST_CASE("degree-two basis") {
    RewriteSystem rs = compile(preset_presentation("glambda", Field::prime(2)));
    CHECK(basis(rs, 1) == std::vector<std::string>{"t", "x1", "y1"});
    CHECK(basis(rs, 2) == std::vector<std::string>{"w1", "t*x1", "t*y1", "x1*y1", "x2", "y2"});
  }

  TEST_CASE("basis counts follow the closed form") {
    RewriteSystem f2 = compile(preset_presentation("glambda", Field::prime(2)));
    auto want = testing_support::glambda_f2_dims(16);
    for (int d = 0; d <= 16; ++d) CHECK(static_cast<std::int64_t>(basis_words(f2, d).size()) == want[d]);
    auto odd = testing_support::glambda_odd_dims(16);
    for (const char* fname : {"F3", "F5", "Q"}) {
      for (SignPolicy policy : {SignPolicy::Strict, SignPolicy::Koszul}) {
        RewriteSystem rs = compile(preset_presentation("glambda", Field::parse(fname), policy));
        for (int d = 0; d <= 16; ++d) CHECK(static_cast<std::int64_t>(basis_words(rs, d).size()) == odd[d]);
      }
    }
  }

  TEST_CASE("odd characteristic signs") {
    RewriteSystem q = compile(preset_presentation("glambda", Field::rationals()));
    CHECK(nf(q, "x3*t") == "w3 - t*x3");
    CHECK(nf(q, "x3*t + t*x3") == "w3");
    CHECK(nf(q, "t*w3") == "w3*t");
    RewriteSystem f3 = compile(preset_presentation("glambda", Field::prime(3)));
    CHECK(nf(f3, "x3*t") == "w3 + 2*t*x3");
    RewriteSystem k = compile(preset_presentation("glambda", Field::rationals(), SignPolicy::Koszul));
    CHECK(nf(k, "y3*t") == "-t*y3");
    CHECK(nf(k, "y3*w3") == "w3*y3");
    CHECK(nf(k, "y3*x3*t") == "w3*y3 - t*x3*y3");
  }

  TEST_CASE("consistency checks pass on presets") {
    for (const char* fname : {"F2", "F3", "Q"}) {
      for (const char* name : {"glambda", "so3", "k0", "k1", "loops_model"}) {
        CAPTURE(fname);
        CAPTURE(name);
        RewriteSystem rs = compile(preset_presentation(name, Field::parse(fname)));
        Report r = check_consistency(rs, 7, 10, 99);
        CHECK(r.passed());
      }
    }
  }

  TEST_CASE("consistency check finds a non-confluent system") {
    // Rules b -> a*a and a*b -> 0: a*b also reduces to a*a*a, which is irreducible.
    Field f = Field::prime(2);
    auto tb = make_table({{"a", 1}, {"b", 2}});
    Presentation p(f, tb, {parse_element("a*a + b", f, tb), parse_element("a*b", f, tb)});
    RewriteSystem rs = compile(p);
    Report r = check_consistency(rs, 4, 5, 1);
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("orientation conflicts are reported") {
    Field f = Field::prime(3);
    auto tb = make_table({{"a", 1}, {"b", 1}});
    Presentation p(f, tb, {parse_element("b*a - a*b", f, tb), parse_element("b*a + a*a", f, tb)});
    CHECK_THROWS_AS(compile(p), OrientationError);
  }

  TEST_CASE("normal form is deterministic and bounded") {
    RewriteSystem rs = compile(preset_presentation("glambda", Field::prime(2)));
    NormalFormStats stats;
    Element e = parse_element("x2*x1*y2*t*x1*t", rs.field(), rs.table());
    Element a = normal_form(rs, e, &stats);
    CHECK(stats.steps > 0);
    CHECK(stats.steps <= word_count(*rs.table(), e.terms().begin()->first.degree()));
    CHECK(normal_form(rs, e) == a);
  }

  TEST_CASE("idempotence and relation kill on seeded random elements") {
    std::mt19937_64 rng(20240607);
    for (const char* fname : {"F2", "F3", "Q"}) {
      Presentation p = preset_presentation("glambda", Field::parse(fname));
      RewriteSystem rs = compile(p);
      for (int i = 0; i < 100; ++i) {
        Element e = testing_support::random_element(p.field(), p.table(), 7, 3, rng, false);
        Element n = normal_form(rs, e);
        CHECK(normal_form(rs, n) == n);
        for (const auto& [w, c] : n.terms()) CHECK_FALSE(rs.find_redex(w));
        Element a = testing_support::random_element(p.field(), p.table(), 3, 2, rng, true);
        const auto& rel = p.expanded_relations()[rng() % p.expanded_relations().size()];
        CHECK(normal_form(rs, a * rel * e).is_zero());
      }
    }
  }

  TEST_CASE("reduced products") {
    RewriteSystem rs = compile(preset_presentation("glambda", Field::prime(2)));
    Element a = parse_element("x1", rs.field(), rs.table());
    Element b = parse_element("w2", rs.field(), rs.table());
    CHECK(to_string(reduced_product(rs, a, b)) == "w1*x2 + w3");
    CHECK(reduced_product(rs, b, a) == parse_element("w2*x1", rs.field(), rs.table()));
  }

  TEST_CASE("word counts") {
    auto tb = make_table({{"t", 1}, {"x1", 1}, {"x2", 2}, {"y1", 1}, {"y2", 2}});
    std::vector<std::uint64_t> want = {1, 3, 11, 39, 139, 495, 1763, 6279, 22363, 79647, 283667};
    for (int d = 0; d <= 10; ++d) CHECK(word_count(*tb, d) == want[d]);
    CHECK(word_count(*tb, -1) == 0);
  }

  TEST_CASE("foreign elements are refused") {
    RewriteSystem rs = compile(preset_presentation("glambda", Field::prime(2)));
    auto other = make_table({{"t", 1}});
    CHECK_THROWS_AS(normal_form(rs, Element::generator(Field::prime(2), other, "t")), IncompatibleContext);
    CHECK_THROWS_AS(normal_form(rs, Element::generator(Field::prime(3), rs.table(), "t")), IncompatibleContext);
  }
}
