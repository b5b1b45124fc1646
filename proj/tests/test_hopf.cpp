#include <doctest.h>

#include "pontryagin/errors.hpp"
#include "pontryagin/hopf.hpp"

using namespace pontryagin;

namespace {

struct F2Glambda {
  RewriteSystem rs = compile(preset_presentation("glambda", Field::prime(2)));
  HopfStructure h = HopfStructure::standard(rs);
  Field f = rs.field();

  Element el(const char* text) const { return parse_element(text, f, rs.table()); }
  DualElement d(const char* text) const { return parse_dual(text, rs); }
  std::string p(const DualElement& a, const char* text) const { return f.format(pair(a, el(text), rs)); }
};

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("coproducts of generators and derived letters") {
    F2Glambda g;
    CHECK(to_string(coproduct(g.h, g.el("t"))) == "1 ⊗ t + t ⊗ 1");
    CHECK(to_string(coproduct(g.h, g.el("x2"))) == "1 ⊗ x2 + x1 ⊗ x1 + x2 ⊗ 1");
    CHECK(to_string(coproduct(g.h, g.el("x1*x2"))) == "1 ⊗ x1*x2 + x1 ⊗ x2 + x2 ⊗ x1 + x1*x2 ⊗ 1");
    CHECK(to_string(coproduct(g.h, g.el("w1"))) == "1 ⊗ w1 + w1 ⊗ 1");
    CHECK(to_string(coproduct(g.h, g.el("w2"))) == "1 ⊗ w2 + x1 ⊗ w1 + w1 ⊗ x1 + w2 ⊗ 1");
    CHECK(coproduct(g.h, g.el("t*t")).is_zero());
    CHECK(coproduct(g.h, g.el("x1*x2 + x2*x1")).is_zero());
    CHECK_THROWS_AS(coproduct(g.h, g.el("t + x2")), HomogeneityError);
  }

  TEST_CASE("coproduct checks pass to degree 8") {
    F2Glambda g;
    Report r = check_coproduct(g.h, 8);
    CHECK(r.passed());
  }

  TEST_CASE("pairing with the dual basis") {
    F2Glambda g;
    CHECK(g.p(g.d("dual(t)"), "t") == "1");
    CHECK(g.p(g.d("dual(t)"), "x1") == "0");
    CHECK(g.p(g.d("dual(t)"), "y1") == "0");
    CHECK(g.p(g.d("dual(w1)"), "x1*t + t*x1") == "1");
    CHECK(g.p(g.d("dual(w1)"), "0") == "0");
    CHECK_THROWS_AS(pair(g.d("dual(t)"), g.el("x2"), g.rs), HomogeneityError);
  }

  TEST_CASE("cup products") {
    F2Glambda g;
    DualElement c = cup(g.d("dual(w1)"), g.d("dual(x1*y2)"), g.h);
    CHECK(g.p(c, "w2*y2") == "1");
    CHECK(g.p(c, "w1*x1*y2") == "1");
    CHECK(to_string(cup(g.d("dual(x1)"), g.d("dual(x1)"), g.h), g.rs) == "dual(x2)");
    CHECK(cup(g.d("dual(t)"), g.d("dual(t)"), g.h).is_zero());
    DualElement tx1 = cup(g.d("dual(t)"), g.d("dual(x1)"), g.h);
    CHECK(g.p(tx1, "x1*t + t*x1") == "0");
    DualElement x2 = cup(g.d("dual(x1)"), g.d("dual(x1)"), g.h);
    CHECK(g.p(cup(g.d("dual(t)"), x2, g.h), "x2*t + t*x2") == "0");
    DualElement x3 = cup(x2, g.d("dual(x1)"), g.h);
    CHECK(g.p(cup(g.d("dual(t)"), x3, g.h), "x1*x2*t + t*x1*x2") == "0");
  }

  TEST_CASE("cup is associative and commutative in low degrees") {
    F2Glambda g;
    std::vector<DualElement> ones = {g.d("dual(t)"), g.d("dual(x1)"), g.d("dual(y1)")};
    for (const auto& a : ones) {
      for (const auto& b : ones) {
        CHECK(cup(a, b, g.h) == cup(b, a, g.h));
        for (const auto& c : ones) CHECK(cup(cup(a, b, g.h), c, g.h) == cup(a, cup(b, c, g.h), g.h));
      }
    }
  }

  TEST_CASE("nilpotency orders") {
    F2Glambda g;
    CHECK(nilpotency_order(g.d("dual(t)"), g.h, 8) == 2);
    CHECK(nilpotency_order(g.d("dual(x1)"), g.h, 8) == 4);
    CHECK(nilpotency_order(g.d("dual(y1)"), g.h, 8) == 4);
    CHECK(nilpotency_order(g.d("dual(x1)"), g.h, 3) == std::nullopt);
  }

  TEST_CASE("dual parsing") {
    F2Glambda g;
    DualElement a = g.d("dual(w1) + dual(x1*y1) + dual(w1)");
    CHECK(to_string(a, g.rs) == "dual(x1*y1)");
    CHECK(g.d("0").is_zero());
    CHECK_THROWS_AS(g.d("dual(x1*t)"), ParseError);
    CHECK_THROWS_AS(g.d("dual(t) + dual(x2)"), HomogeneityError);
    CHECK_THROWS_AS(g.d("t"), ParseError);
    CHECK_THROWS_AS(g.d("dual(t"), ParseError);
    RewriteSystem q = compile(preset_presentation("glambda", Field::rationals(), SignPolicy::Koszul));
    CHECK(to_string(parse_dual("-1/2*dual(t)", q), q) == "-1/2*dual(t)");
  }

  TEST_CASE("odd characteristic needs Koszul centrality") {
    for (const char* fname : {"F3", "Q"}) {
      Field f = Field::parse(fname);
      CHECK_THROWS_AS(HopfStructure::standard(compile(preset_presentation("glambda", f))), PresentationError);
      RewriteSystem rs = compile(preset_presentation("glambda", f, SignPolicy::Koszul));
      HopfStructure h = HopfStructure::standard(rs);
      CHECK(check_coproduct(h, 8).passed());
      CHECK(coproduct(h, parse_element("t*t", f, rs.table())).is_zero());
      DualElement c = cup(parse_dual("dual(t)", rs), parse_dual("dual(x3)", rs), h);
      CHECK(f.is_zero(pair(c, rs.base().parse("x3*t + t*x3"), rs)));
      CHECK(nilpotency_order(parse_dual("dual(t)", rs), h, 4) == 2);
    }
  }

  TEST_CASE("malformed coproducts are rejected") {
    RewriteSystem rs = compile(preset_presentation("so3", Field::prime(2)));
    Field f = rs.field();
    Word x1 = Word::single(*rs.table(), 0), x2 = Word::single(*rs.table(), 1);
    TensorElement d1(f, rs.table()), d2(f, rs.table());
    d1.add_term({x1, Word{}}, f.one());
    d1.add_term({Word{}, x1}, f.one());
    d2.add_term({x2, Word{}}, f.one());
    CHECK_THROWS_AS(HopfStructure(rs, {d1, d2}), PresentationError);
    d2.add_term({Word{}, x2}, f.one());
    CHECK_NOTHROW(HopfStructure(rs, {d1, d2}));
    TensorElement bad = d2;
    bad.add_term({x1, Word{}}, f.one());
    CHECK_THROWS_AS(HopfStructure(rs, {d1, bad}), PresentationError);
  }

  TEST_CASE("diagonal of SO(3) through the Kunneth map") {
    Field f = Field::prime(2);
    RewriteSystem so3 = compile(preset_presentation("so3", f));
    HopfStructure h = HopfStructure::standard(so3);
    RewriteSystem k0 = compile(preset_presentation("k0", f));
    std::map<std::string, std::string> right = {{"x1", "z1"}, {"x2", "z2"}};
    auto image = [&](const char* g) {
      return to_string(kunneth_image(coproduct(h, so3.base().parse(g)), k0, {}, right));
    };
    CHECK(image("x1") == "x1 + z1");
    CHECK(image("x2") == "x1*z1 + x2 + z2");
    CHECK(image("x1*x2") == "x1*x2 + x1*z2 + x2*z1 + z1*z2");
  }

  TEST_CASE("tensor multiplication signs") {
    RewriteSystem rs = compile(preset_presentation("glambda", Field::rationals(), SignPolicy::Koszul));
    Field f = rs.field();
    Element t = parse_element("t", f, rs.table());
    Element one = parse_element("1", f, rs.table());
    TensorElement a = tensor(one, t), b = tensor(t, one);
    CHECK(to_string(multiply(rs, a, b)) == "-t ⊗ t");
    CHECK(to_string(multiply(rs, b, a)) == "t ⊗ t");
  }
}
