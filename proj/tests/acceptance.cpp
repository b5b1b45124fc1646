// Acceptance criteria with frozen expected values and time limits.  Prints
// one PASS/FAIL line per criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pontryagin/errors.hpp"
#include "pontryagin/hopf.hpp"
#include "pontryagin/oracle.hpp"
#include "pontryagin/presentation.hpp"
#include "pontryagin/rewrite.hpp"
#include "pontryagin/series.hpp"
#include "support.hpp"

using namespace pontryagin;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

std::vector<std::uint64_t> as_unsigned(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

const Field f2 = Field::prime(2);

Outcome ranks() {
  Outcome o;
  Presentation g = preset_presentation("glambda", f2);
  RewriteSystem rs = compile(g);
  const std::uint64_t expected[] = {3, 6};
  for (int d = 1; d <= 2; ++d) {
    auto rw = basis_words(rs, d).size();
    auto orc = quotient_dimension(g, d);
    o.expect(rw == expected[d - 1], "rewrite H" + std::to_string(d) + " = " + std::to_string(rw));
    o.expect(orc == expected[d - 1], "oracle H" + std::to_string(d) + " = " + std::to_string(orc));
  }
  o.note = "H1 = 3, H2 = 6";
  return o;
}

Outcome triple_agreement() {
  Outcome o;
  Presentation g = preset_presentation("glambda", f2);
  RewriteSystem rs = compile(g);
  auto closed = testing_support::glambda_f2_dims(16);
  auto orc = quotient_dimensions(g, 8);
  for (int d = 0; d <= 16; ++d) {
    auto rw = static_cast<std::int64_t>(basis_words(rs, d).size());
    o.expect(rw == closed[d], "rewrite degree " + std::to_string(d) + ": " + std::to_string(rw));
    if (d <= 8) {
      o.expect(static_cast<std::int64_t>(orc[d]) == closed[d],
               "oracle degree " + std::to_string(d) + ": " + std::to_string(orc[d]));
    }
  }
  o.note = "dims " + join(closed);
  return o;
}

Outcome odd_fields() {
  Outcome o;
  auto closed = testing_support::glambda_odd_dims(16);
  std::vector<std::int64_t> seen[2];
  int i = 0;
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    seen[i] = series_of(compile(preset_presentation("glambda", f)), 16).coeffs();
    o.expect(seen[i] == closed, f.name() + " dims " + join(seen[i]));
    ++i;
  }
  o.expect(seen[0] == seen[1], "Q and F3 differ");
  o.expect(seen[0][1] == 1, "degree-1 dimension " + std::to_string(seen[0][1]));
  o.note = "dims " + join(closed);
  return o;
}

Outcome normal_forms() {
  Outcome o;
  Presentation g = preset_presentation("glambda", f2);
  RewriteSystem rs = compile(g);
  auto nf = [&](const char* s) { return to_string(normal_form(rs, parse_element(s, f2, rs.table()))); };
  o.expect(nf("x1*t") == "w1 + t*x1", "nf(x1 t) = " + nf("x1*t"));
  o.expect(nf("x1*w2") == "w1*x2 + w3", "nf(x1 w2) = " + nf("x1*w2"));
  o.expect(nf("t*t") == "0", "nf(t t) = " + nf("t*t"));
  Element lhs = g.parse("x1*x2*t");
  Element r = normal_form(rs, lhs);
  o.expect(r == parse_element("t*x1*x2 + w3", f2, rs.table()), "nf(x1 x2 t) = " + to_string(r));
  o.expect(ideal_contains(g, lhs - rs.embed(r)), "x1 x2 t - nf(x1 x2 t) not in the ideal");
  // After x2 t -> t x2 + w2, reduce either x1 t or x1 w2 first.
  Element path_a = normal_form(rs, parse_element("t*x1*x2 + w1*x2 + x1*w2", f2, rs.table()));
  Element path_b = normal_form(rs, parse_element("x1*t*x2 + w1*x2 + w3", f2, rs.table()));
  o.expect(path_a == path_b && path_a == r, "reduction paths disagree: " + to_string(path_a) + " vs " + to_string(path_b));
  o.note = "x1 x2 t -> " + to_string(r) + " (certified)";
  return o;
}

Outcome duality() {
  Outcome o;
  Presentation g = preset_presentation("glambda", f2);
  RewriteSystem rs = compile(g);
  HopfStructure h = HopfStructure::standard(rs);
  auto dual = [&](const char* s) { return parse_dual(s, rs); };
  auto t = dual("dual(t)");
  auto x1 = dual("dual(x1)");
  auto x2 = cup(x1, x1, h);
  auto x3 = cup(x2, x1, h);
  o.expect(x2 == dual("dual(x2)"), "x1^ squared is " + to_string(x2, rs));
  o.expect(x3 == dual("dual(x1*x2)"), "x1^ cubed is " + to_string(x3, rs));
  const char* comms[] = {"x1*t + t*x1", "x2*t + t*x2", "x1*x2*t + t*x1*x2"};
  const DualElement* xs[] = {&x1, &x2, &x3};
  for (int i = 0; i < 3; ++i) {
    Scalar v = pair(cup(t, *xs[i], h), g.parse(comms[i]), rs);
    o.expect(f2.is_zero(v), "<t^ cup x" + std::to_string(i + 1) + "^, [x, t]> = " + f2.format(v));
  }
  {
    RewriteSystem rq = compile(preset_presentation("glambda", Field::rationals(), SignPolicy::Koszul));
    HopfStructure hq = HopfStructure::standard(rq);
    auto c = cup(parse_dual("dual(t)", rq), parse_dual("dual(x3)", rq), hq);
    Scalar v = pair(c, rq.base().parse("x3*t + t*x3"), rq);
    o.expect(rq.field().is_zero(v), "over Q <t^ cup x3^, [x3, t]> = " + rq.field().format(v));
  }
  auto c = cup(dual("dual(w1)"), dual("dual(x1*y2)"), h);
  Scalar a = pair(c, parse_element("w2*y2", f2, rs.table()), rs);
  Scalar b = pair(c, parse_element("w1*x1*y2", f2, rs.table()), rs);
  o.expect(a == f2.one(), "<w1^ cup (x1 y2)^, w2 y2> = " + f2.format(a));
  o.expect(b == f2.one(), "<w1^ cup (x1 y2)^, w1 x1 y2> = " + f2.format(b));
  auto ot = nilpotency_order(t, h, 8);
  auto ox = nilpotency_order(x1, h, 8);
  o.expect(ot == 2, "order of t^");
  o.expect(ox == 4, "order of x1^");
  Report rep = check_coproduct(h, 8);
  for (const auto& e : rep.entries()) {
    o.expect(e.status != Status::Fail, "coproduct " + e.check + " degree " + std::to_string(e.degree) + ": " + e.witness);
  }
  o.note = "orders 2 and 4, coproduct checks to degree 8";
  return o;
}

Outcome diagonal() {
  Outcome o;
  RewriteSystem so3 = compile(preset_presentation("so3", f2));
  HopfStructure hs = HopfStructure::standard(so3);
  RewriteSystem k0 = compile(preset_presentation("k0", f2));
  std::map<std::string, std::string> right = {{"x1", "z1"}, {"x2", "z2"}};
  const std::pair<const char*, const char*> cases[] = {
      {"x1", "x1 + z1"}, {"x2", "x2 + z2 + x1*z1"}, {"x1*x2", "x1*x2 + z1*z2 + x1*z2 + x2*z1"}};
  for (const auto& [in, want] : cases) {
    Element got = kunneth_image(coproduct(hs, so3.base().parse(in)), k0, {}, right);
    Element expected = normal_form(k0, parse_element(want, f2, k0.table()));
    o.expect(got == expected, std::string("d_*(") + in + ") = " + to_string(got));
  }
  o.note = "y1, y2, y3 images exact";
  return o;
}

Outcome fibration() {
  Outcome o;
  Report r = check_fibration_identities(16);
  for (const auto& e : r.entries()) {
    o.expect(e.status != Status::Fail, e.check + " degree " + std::to_string(e.degree) + ": " + e.witness);
  }
  // Frozen independent values.
  auto g = testing_support::glambda_f2_dims(16);
  auto k0 = testing_support::expand({1, 2, 3, 4, 3, 2, 1}, {1}, 16);
  auto u0 = testing_support::expand({1, 1}, {1, 0, -1, -1, -1}, 16);
  PowerSeries quotient = PowerSeries(g, 16) / PowerSeries(k0, 16);
  o.expect(quotient.coeffs() == u0, "P_G / P_K0 = " + to_string(quotient));
  for (int d = 1; d <= 16; ++d) o.expect(u0[d] >= u0[d - 1], "P_U0 decreases at " + std::to_string(d));
  for (int d = 4; d <= 16; ++d) o.expect(u0[d] >= 2, "P_U0 below 2 at " + std::to_string(d));
  o.note = "P_U0 = " + join(u0);
  return o;
}

Outcome homotopy_model() {
  Outcome o;
  for (const Field& f : {f2, Field::prime(3), Field::rationals()}) {
    Report r = check_homotopy_model(16, f);
    for (const auto& e : r.entries()) {
      o.expect(e.status != Status::Fail, f.name() + " " + e.check + ": " + e.witness);
    }
  }
  o.note = "F2, F3, Q to degree 16";
  return o;
}

Outcome properties() {
  Outcome o;
  {
    auto s = series_of(compile(free_algebra({{"w1", 2}, {"w2", 3}, {"w3", 4}}, f2)), 16);
    for (int d = 4; d <= 16; ++d) o.expect(s[d] == s[d - 2] + s[d - 3] + s[d - 4], "recurrence at " + std::to_string(d));
  }
  std::mt19937_64 rng(20261018);
  int presets = 0;
  for (const auto& name : preset_names()) {
    for (const Field& f : {f2, Field::prime(3), Field::rationals()}) {
      PresetValue v = preset(name, f, SignPolicy::Koszul);
      if (!std::holds_alternative<Presentation>(v)) continue;
      const Presentation& p = std::get<Presentation>(v);
      RewriteSystem rs = compile(p);
      ++presets;
      for (int i = 0; i < 500; ++i) {
        Element e = testing_support::random_element(f, rs.table(), 6, 4, rng, false);
        Element n = normal_form(rs, e);
        if (!(normal_form(rs, n) == n)) {
          o.expect(false, name + "/" + f.name() + " not idempotent on " + to_string(e));
          break;
        }
        const auto& rels = p.expanded_relations();
        Element base = testing_support::random_element(f, p.table(), 3, 2, rng, false);
        if (rels.empty() || base.is_zero()) continue;
        Element killed = normal_form(rs, rs.lift(base * rels[i % rels.size()] * base));
        if (!killed.is_zero()) {
          o.expect(false, name + "/" + f.name() + " relation survives: " + to_string(killed));
          break;
        }
      }
    }
  }
  int checked = 0;
  const Field fields[] = {f2, Field::prime(3), Field::rationals()};
  for (int i = 0; i < 50; ++i) {
    Field f = fields[rng() % 3];
    std::vector<Generator> gens = {{"a", 1}, {"b", 1 + static_cast<int>(rng() % 2)}};
    if (rng() % 2) gens.push_back({"c", 1 + static_cast<int>(rng() % 2)});
    auto tb = make_table(gens);
    std::vector<Element> rels;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
      Element r = testing_support::random_element(f, tb, 3, 3, rng, true);
      if (!r.is_zero()) rels.push_back(r);
    }
    if (rels.empty()) rels.push_back(parse_element("a*a", f, tb));
    Presentation p(f, tb, rels);
    OracleOptions lead, trail, all;
    trail.pivot = PivotOrder::Trailing;
    all.spanning = Spanning::AllMultiples;
    auto a = quotient_dimensions(p, 6, lead);
    o.expect(a == quotient_dimensions(p, 6, trail), "pivot order changes ranks: " + presentation_to_json(p));
    o.expect(a == quotient_dimensions(p, 6, all), "spanning set changes ranks: " + presentation_to_json(p));
    ++checked;
  }
  o.note = std::to_string(presets) + " preset/field pairs x 500 elements, " + std::to_string(checked) +
           " random presentations";
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "ranks of H1 and H2", 1.0, ranks},
      {2, "triple agreement", 60.0, triple_agreement},
      {3, "odd characteristic", 5.0, odd_fields},
      {4, "normal-form goldens", 1.0, normal_forms},
      {5, "duality suite", 10.0, duality},
      {6, "diagonal lemma", 1.0, diagonal},
      {7, "fibration identities", 1.0, fibration},
      {8, "homotopy model", 1.0, homotopy_model},
      {9, "property suites", 60.0, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    const bool ok = o.failures.empty();
    if (!ok) ++failed;
    std::printf("%s  criterion %d  %-22s %8.3f s  %s\n", ok ? "PASS" : "FAIL", c.number, c.name, secs,
                ok ? o.note.c_str() : "");
    for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::printf("      %s\n", o.failures[i].c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
