#include "pontryagin/verify_suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "pontryagin/errors.hpp"
#include "pontryagin/hopf.hpp"
#include "pontryagin/oracle.hpp"
#include "pontryagin/rewrite.hpp"
#include "pontryagin/series.hpp"

namespace pontryagin {

bool VerifyResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::string VerifyResult::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["max_degree"] = options.max_degree;
  j["oracle_max_degree"] = options.oracle_max_degree;
  j["seed"] = options.seed;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"anchor", c.anchor},
                           {"source", c.source},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"status", c.passed ? "pass" : "fail"}});
  }
  j["passed"] = passed();
  return j.dump(2);
}

std::string VerifyResult::to_table() const {
  std::size_t width = 4;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << std::string(width - c.name.size() + 2, ' ') << c.actual;
    if (!c.passed) out << "  (expected " << c.expected << ")";
    out << '\n';
  }
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; });
  out << checks.size() << " checks, " << failed << " failed\n";
  return out.str();
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"reported", "paper"};
  return names;
}

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string summarize(const Report& r) {
  if (r.passed()) {
    std::size_t n = 0;
    for (const auto& e : r.entries()) n += e.status == Status::Pass;
    return std::to_string(n) + " entries pass";
  }
  for (const auto& e : r.entries()) {
    if (e.status == Status::Fail) return e.check + " (degree " + std::to_string(e.degree) + "): " + e.witness;
  }
  return "failed";
}

class Suite {
 public:
  explicit Suite(VerifyResult& result) : result_(result) {}

  // body returns the actual value as a string; the check passes when it
  // equals `expected`.
  void value(std::string name, std::string anchor, std::string source, std::string expected,
             const std::function<std::string()>& body) {
    VerifyCheck c{std::move(name), std::move(anchor), std::move(source), std::move(expected), {}, false};
    try {
      c.actual = body();
      c.passed = c.actual == c.expected;
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    result_.checks.push_back(std::move(c));
  }

  void report(std::string name, std::string anchor, std::string source, const std::function<Report()>& body) {
    VerifyCheck c{std::move(name), std::move(anchor), std::move(source), "all entries pass", {}, false};
    try {
      Report r = body();
      c.passed = r.passed();
      c.actual = summarize(r);
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    result_.checks.push_back(std::move(c));
  }

 private:
  VerifyResult& result_;
};

}  // namespace

VerifyResult run_verify_suite(const std::string& suite, const VerifyOptions& options) {
  if (std::find(verify_suite_names().begin(), verify_suite_names().end(), suite) == verify_suite_names().end()) {
    throw ParseError("unknown suite '" + suite + "' (available: reported)");
  }
  VerifyResult result{suite, options, {}};
  Suite s(result);
  OracleOptions oracle_opts;
  oracle_opts.max_words = options.max_words;
  const int n = options.max_degree;
  const int on = options.oracle_max_degree;

  const Field f2 = Field::prime(2);
  const Field q = Field::rationals();
  const Presentation g2 = preset_presentation("glambda", f2);
  const RewriteSystem rs2 = compile(g2);
  auto nf = [&](const char* text) { return to_string(normal_form(rs2, g2.parse(text))); };

  s.value("h1-rank-rewrite", "rank of H_1(G;F2)", "reported", "3",
          [&] { return std::to_string(basis_words(rs2, 1).size()); });
  s.value("h1-rank-oracle", "rank of H_1(G;F2)", "reported", "3",
          [&] { return std::to_string(quotient_dimension(g2, 1, oracle_opts)); });
  s.value("h2-rank-rewrite", "rank of H_2(G;F2): x2, y2, t x1, t y1, x1 y1, w1", "reported", "6",
          [&] { return std::to_string(basis_words(rs2, 2).size()); });
  s.value("h2-rank-oracle", "rank of H_2(G;F2)", "reported", "6",
          [&] { return std::to_string(quotient_dimension(g2, 2, oracle_opts)); });

  s.value("dims-three-routes", "rewrite basis = oracle rank = (1+q)^3(1+q^2)^2/(1-q^2-q^3-q^4)", "derived", "agree",
          [&] {
            PowerSeries closed = rational_series({1, 3, 5, 7, 7, 5, 3, 1}, {1, 0, -1, -1, -1}, n);
            PowerSeries rewrite = series_of(rs2, n);
            if (!(rewrite == closed)) return "rewrite " + to_string(rewrite) + " vs closed form " + to_string(closed);
            PowerSeries oracle = oracle_series(g2, on, oracle_opts);
            if (!(oracle == closed.truncated(on))) return "oracle " + to_string(oracle);
            return std::string("agree");
          });

  s.value("odd-characteristic-dims", "Q and F3 agree with (1+q)(1+q^3)^2/(1-q^4); no odd torsion", "reported",
          "agree, degree-1 dimension 1", [&] {
            PowerSeries closed = rational_series({1, 1, 0, 2, 2, 0, 1, 1}, {1, 0, 0, 0, -1}, n);
            PowerSeries sq = series_of(compile(preset_presentation("glambda", q)), n);
            PowerSeries s3 = series_of(compile(preset_presentation("glambda", Field::prime(3))), n);
            if (!(sq == closed) || !(s3 == closed)) return "Q " + to_string(sq) + ", F3 " + to_string(s3);
            return "agree, degree-1 dimension " + std::to_string(sq[1]);
          });

  s.value("nf-commutator", "x_i t = t x_i + w_i", "reported", "w1 + t*x1", [&] { return nf("x1*t"); });
  s.value("nf-rotation-on-w", "x1 w2 = w1 x2 + w3", "reported", "w1*x2 + w3", [&] {
    return to_string(normal_form(rs2, parse_element("x1*w2", f2, rs2.table())));
  });
  s.value("nf-circle-square", "t^2 = 0", "reported", "0", [&] { return nf("t*t"); });
  s.value("nf-x1x2t", "x1 x2 t, certified by ideal membership", "derived", "w3 + t*x1*x2 (certified)", [&] {
    Element lhs = g2.parse("x1*x2*t");
    Element r = normal_form(rs2, lhs);
    bool member = ideal_contains(g2, lhs - rs2.embed(r), oracle_opts);
    return to_string(r) + (member ? " (certified)" : " (not in ideal)");
  });

  s.report("rewrite-consistency", "relation multiples vanish, overlaps resolve (seeded)", "derived",
           [&] { return check_consistency(rs2, std::min(n, 8), 20, options.seed); });
  s.report("basis-vs-oracle", "normal-form basis is a basis of the quotient", "derived",
           [&] { return verify_basis(g2, rs2, on, oracle_opts); });
  s.report("rules-in-ideal", "every rewrite rule holds in the quotient", "derived",
           [&] { return verify_rules(rs2, oracle_opts); });
  s.value("ideal-membership", "t^2 in the ideal, x1 t + t x1 not (w1 is a basis class)", "reported", "true,false",
          [&] {
            return std::string(ideal_contains(g2, g2.parse("t*t"), oracle_opts) ? "true" : "false") + "," +
                   (ideal_contains(g2, g2.parse("x1*t + t*x1"), oracle_opts) ? "true" : "false");
          });

  const HopfStructure h2 = HopfStructure::standard(rs2);
  auto dual = [&](const char* text) { return parse_dual(text, rs2); };
  auto fmt2 = [&](const Scalar& x) { return f2.format(x); };

  s.value("dual-basis", "t^(t) = 1, t^(x1) = t^(y1) = 0", "reported", "1,0,0", [&] {
    auto t = dual("dual(t)");
    return fmt2(pair(t, g2.parse("t"), rs2)) + "," + fmt2(pair(t, g2.parse("x1"), rs2)) + "," +
           fmt2(pair(t, g2.parse("y1"), rs2));
  });
  s.value("cup-on-commutators", "(t^ cup x_i^)[x_i, t] = 0 for i = 1, 2, 3", "reported", "0,0,0", [&] {
    auto t = dual("dual(t)");
    auto x1 = dual("dual(x1)");
    auto x2 = cup(x1, x1, h2);
    auto x3 = cup(x2, x1, h2);
    std::string out;
    const char* comms[] = {"x1*t + t*x1", "x2*t + t*x2", "x1*x2*t + t*x1*x2"};
    const DualElement* xs[] = {&x1, &x2, &x3};
    for (int i = 0; i < 3; ++i) out += (i ? "," : "") + fmt2(pair(cup(t, *xs[i], h2), g2.parse(comms[i]), rs2));
    return out;
  });
  s.value("cup-on-commutator-odd", "(t^ cup x3^)[x3, t] = 0 over Q", "reported", "0", [&] {
    RewriteSystem rq = compile(preset_presentation("glambda", q, SignPolicy::Koszul));
    HopfStructure hq = HopfStructure::standard(rq);
    auto c = cup(parse_dual("dual(t)", rq), parse_dual("dual(x3)", rq), hq);
    return q.format(pair(c, rq.base().parse("x3*t + t*x3"), rq));
  });
  s.value("cup-w1-x1y2", "<w1^ cup (x1 y2)^, w2 y2> = 1 and <.., w1 x1 y2> = 1", "reported", "1,1", [&] {
    auto c = cup(dual("dual(w1)"), dual("dual(x1*y2)"), h2);
    return fmt2(pair(c, parse_element("w2*y2", f2, rs2.table()), rs2)) + "," +
           fmt2(pair(c, parse_element("w1*x1*y2", f2, rs2.table()), rs2));
  });
  s.value("cup-x1-square", "x1^ cup x1^ = x2^", "derived", "dual(x2)",
          [&] { return to_string(cup(dual("dual(x1)"), dual("dual(x1)"), h2), rs2); });
  s.value("t-hat-square", "t^ cup t^ = 0 on every degree-2 class", "reported", "0",
          [&] { return to_string(cup(dual("dual(t)"), dual("dual(t)"), h2), rs2); });
  s.value("nilpotency-orders", "t^ order 2, x1^ order 4 (Z2[x1^]/x1^4), y1^ order 4", "reported", "2,4,4", [&] {
    std::string out;
    for (const char* g : {"dual(t)", "dual(x1)", "dual(y1)"}) {
      auto o = nilpotency_order(dual(g), h2, 8);
      out += (out.empty() ? "" : ",") + (o ? std::to_string(*o) : std::string(">8"));
    }
    return out;
  });
  s.report("coproduct-checks", "coproduct kills relations; coassociative; counital", "derived",
           [&] { return check_coproduct(h2, on); });

  s.value("diagonal-lemma", "d_*(y1) = x1+z1, d_*(y2) = x2+z2+x1 z1, d_*(y3) = x3+z3+x1 z2+x2 z1", "reported",
          "x1 + z1; x1*z1 + x2 + z2; x1*x2 + x1*z2 + x2*z1 + z1*z2", [&] {
            RewriteSystem so3 = compile(preset_presentation("so3", f2));
            HopfStructure hs = HopfStructure::standard(so3);
            RewriteSystem k0 = compile(preset_presentation("k0", f2));
            std::map<std::string, std::string> right = {{"x1", "z1"}, {"x2", "z2"}};
            std::string out;
            for (const char* g : {"x1", "x2", "x1*x2"}) {
              if (!out.empty()) out += "; ";
              out += to_string(kunneth_image(coproduct(hs, so3.base().parse(g)), k0, {}, right));
            }
            return out;
          });

  s.value("so3-homology", "H_*(SO(3);F2) = Lambda(x1,x2); H_*(SO(3);Q) in degrees 0 and 3", "reported",
          "1,1,1,1,0; 1,0,0,1,0", [&] {
            return join(quotient_dimensions(preset_presentation("so3", f2), 4, oracle_opts)) + "; " +
                   join(quotient_dimensions(preset_presentation("so3", q), 4, oracle_opts));
          });
  s.value("k0-homology", "H_*(SO(3) x SO(3);F2)", "derived", "1,2,3,4,3,2,1",
          [&] { return join(quotient_dimensions(preset_presentation("k0", f2), 6, oracle_opts)); });
  s.report("fibration-identities", "Leray-Hirsch quotients and H_p(U0) = H_{p-1}(U1)", "identity",
           [&] { return check_fibration_identities(n); });
  for (const Field& f : {f2, Field::prime(3), q}) {
    s.report("product-model-" + f.name(), "glambda = J(S1 smash SO3) x S1 x SO3 x SO3 additively", "identity",
             [&] { return check_homotopy_model(n, f); });
  }
  s.value("free-word-recurrence", "F2<w1,w2,w3>: c_d = c_{d-2} + c_{d-3} + c_{d-4}", "derived", "holds", [&] {
    Presentation free = free_algebra({{"w1", 2}, {"w2", 3}, {"w3", 4}}, f2);
    PowerSeries s = series_of(compile(free), n);
    for (int d = 4; d <= n; ++d) {
      if (s[d] != s[d - 2] + s[d - 3] + s[d - 4]) return "fails at degree " + std::to_string(d);
    }
    return std::string("holds");
  });
  return result;
}

}  // namespace pontryagin
