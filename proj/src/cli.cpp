#include "pontryagin/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "pontryagin/errors.hpp"
#include "pontryagin/hopf.hpp"
#include "pontryagin/oracle.hpp"
#include "pontryagin/rewrite.hpp"
#include "pontryagin/series.hpp"
#include "pontryagin/verify_suite.hpp"

namespace pontryagin {

namespace {

using nlohmann::json;

struct Options {
  std::string preset = "glambda";
  std::string field = "F2";
  std::string presentation;
  std::string sign_policy = "strict";
  int max_degree = -1;
  bool oracle = false;
  std::uint64_t max_words = 500000;
  std::uint64_t seed = 7;
  std::string format = "json";
  std::string suite = "reported";
  std::vector<std::string> inputs;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--preset", o.preset, "built-in algebra (see `presets`)");
  sub->add_option("--field", o.field, "coefficient field: F2, F<p> or Q");
  sub->add_option("--presentation", o.presentation, "JSON presentation file, instead of --preset");
  sub->add_option("--sign-policy", o.sign_policy, "centrality signs for presets: strict or koszul")
      ->check(CLI::IsMember({"strict", "koszul"}));
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
}

void add_degree(CLI::App* sub, Options& o) {
  sub->add_option("--max-degree", o.max_degree, "highest degree")->check(CLI::NonNegativeNumber);
}

void add_oracle(CLI::App* sub, Options& o) {
  sub->add_flag("--oracle", o.oracle, "use exact linear algebra instead of the rewrite system");
  sub->add_option("--max-words", o.max_words, "largest degree slice the linear algebra will build");
}

PresetValue load(const Options& o) {
  if (!o.presentation.empty()) {
    std::ifstream in(o.presentation);
    if (!in) throw UsageError("cannot read presentation file '" + o.presentation + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation_json(buf.str());
  }
  return preset(o.preset, Field::parse(o.field), parse_sign_policy(o.sign_policy));
}

Presentation load_presentation(const Options& o, const char* verb) {
  PresetValue v = load(o);
  if (auto* p = std::get_if<Presentation>(&v)) return *p;
  throw UsageError("`" + std::string(verb) + "` needs a presentation; preset '" + o.preset +
                   "' is a basis schema (only `dims` and `series` accept it)");
}

std::string source_name(const Options& o) { return o.presentation.empty() ? o.preset : o.presentation; }

OracleOptions oracle_options(const Options& o) {
  OracleOptions opts;
  opts.max_words = o.max_words;
  return opts;
}

const std::string& input(const Options& o, std::size_t i, const char* what) {
  if (o.inputs.size() <= i) throw UsageError(std::string("missing ") + what);
  return o.inputs[i];
}

HopfStructure hopf_for(const RewriteSystem& rs) {
  try {
    return HopfStructure::standard(rs);
  } catch (const PresentationError& e) {
    std::string msg = e.what();
    if (rs.field().characteristic() != 2 && rs.base().sign_policy() == SignPolicy::Strict) {
      msg += " (odd-degree generators need --sign-policy koszul for a coproduct to exist)";
    }
    throw PresentationError(msg);
  }
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& table) {
  if (o.format == "table") {
    out << table;
    if (!table.empty() && table.back() != '\n') out << '\n';
  } else {
    out << j.dump() << '\n';
  }
}

json anchors_for(const Options& o, const Field& f) {
  json a = json::array();
  if (!o.presentation.empty()) return a;
  if (o.preset == "glambda" && f.characteristic() == 2) {
    a.push_back({{"degree", 0}, {"value", 1}, {"note", "connected group"}});
    a.push_back({{"degree", 1}, {"value", 3}, {"note", "rank of H_1: t, x1, y1"}});
    a.push_back({{"degree", 2}, {"value", 6}, {"note", "rank of H_2: x2, y2, t*x1, t*y1, x1*y1, w1"}});
    a.push_back({{"degree", "all"}, {"note", "closed form (1+q)^3 (1+q^2)^2 / (1-q^2-q^3-q^4)"}});
  } else if (o.preset == "glambda") {
    a.push_back({{"degree", 1}, {"value", 1}, {"note", "one degree-1 generator t"}});
    a.push_back({{"degree", "all"}, {"note", "closed form (1+q)(1+q^3)^2 / (1-q^4)"}});
  } else if (o.preset == "so3") {
    a.push_back({{"degree", "all"}, {"note", f.characteristic() == 2 ? "exterior algebra on x1, x2"
                                                                      : "exterior algebra on x3"}});
  }
  return a;
}

int cmd_dims(const Options& o, std::ostream& out) {
  PresetValue v = load(o);
  std::vector<std::uint64_t> dims;
  std::string route;
  Field field = Field::parse(o.field);
  if (auto* schema = std::get_if<BasisSchema>(&v)) {
    const int n = o.max_degree < 0 ? 16 : o.max_degree;
    for (int d = 0; d <= n; ++d) dims.push_back(schema->labels(d).size());
    route = "schema";
  } else {
    const Presentation& p = std::get<Presentation>(v);
    field = p.field();
    if (o.oracle) {
      dims = quotient_dimensions(p, o.max_degree < 0 ? 8 : o.max_degree, oracle_options(o));
      route = "oracle";
    } else {
      RewriteSystem rs = compile(p);
      const int n = o.max_degree < 0 ? 16 : o.max_degree;
      for (int d = 0; d <= n; ++d) dims.push_back(basis_words(rs, d).size());
      route = "rewrite";
    }
  }
  json j = {{"preset", source_name(o)}, {"field", field.name()}, {"route", route}, {"dims", dims},
            {"anchors", anchors_for(o, field)}};
  std::ostringstream t;
  t << "degree  dim   (" << source_name(o) << ", " << field.name() << ", " << route << ")\n";
  for (std::size_t d = 0; d < dims.size(); ++d) t << std::setw(6) << d << "  " << dims[d] << '\n';
  emit(out, o, j, t.str());
  return 0;
}

int cmd_nf(const Options& o, std::ostream& out) {
  Presentation p = load_presentation(o, "nf");
  RewriteSystem rs = compile(p);
  json rows = json::array();
  std::string table;
  if (o.inputs.empty()) throw UsageError("missing element expression");
  for (const auto& text : o.inputs) {
    std::string r = to_string(normal_form(rs, parse_element(text, p.field(), rs.table())));
    rows.push_back({{"input", text}, {"normal_form", r}});
    table += text + " -> " + r + "\n";
  }
  emit(out, o, rows.size() == 1 ? rows[0] : rows, table);
  return 0;
}

int cmd_mul(const Options& o, std::ostream& out, bool commutator) {
  Presentation p = load_presentation(o, commutator ? "comm" : "mul");
  RewriteSystem rs = compile(p);
  const std::string& a_text = input(o, 0, "left operand");
  const std::string& b_text = input(o, 1, "right operand");
  Element a = parse_element(a_text, p.field(), rs.table());
  Element b = parse_element(b_text, p.field(), rs.table());
  Element r = commutator ? normal_form(rs, graded_commutator(a, b)) : reduced_product(rs, a, b);
  const char* key = commutator ? "commutator" : "product";
  json j = {{"left", a_text}, {"right", b_text}, {key, to_string(r)}};
  emit(out, o, j, (commutator ? "[" + a_text + ", " + b_text + "] = " : "(" + a_text + ")*(" + b_text + ") = ") +
                      to_string(r));
  return 0;
}

int cmd_basis(const Options& o, std::ostream& out) {
  Presentation p = load_presentation(o, "basis");
  RewriteSystem rs = compile(p);
  const int n = o.max_degree < 0 ? 4 : o.max_degree;
  json j = json::array();
  std::ostringstream t;
  for (int d = 0; d <= n; ++d) {
    std::vector<std::string> words;
    for (const auto& w : basis_words(rs, d)) words.push_back(format_word(*rs.table(), w));
    j.push_back({{"degree", d}, {"words", words}});
    t << d << ":";
    for (const auto& w : words) t << ' ' << w;
    t << '\n';
  }
  emit(out, o, j, t.str());
  return 0;
}

int cmd_pair(const Options& o, std::ostream& out) {
  Presentation p = load_presentation(o, "pair");
  RewriteSystem rs = compile(p);
  const std::string& a_text = input(o, 0, "dual element, e.g. dual(t)");
  const std::string& e_text = input(o, 1, "element");
  DualElement a = parse_dual(a_text, rs);
  Scalar v = pair(a, parse_element(e_text, p.field(), rs.table()), rs);
  json j = {{"dual", a_text}, {"element", e_text}, {"value", p.field().format(v)}};
  emit(out, o, j, "<" + a_text + ", " + e_text + "> = " + p.field().format(v));
  return 0;
}

int cmd_cup(const Options& o, std::ostream& out) {
  Presentation p = load_presentation(o, "cup");
  RewriteSystem rs = compile(p);
  HopfStructure h = hopf_for(rs);
  const std::string& a_text = input(o, 0, "left dual element");
  const std::string& b_text = input(o, 1, "right dual element");
  DualElement c = cup(parse_dual(a_text, rs), parse_dual(b_text, rs), h);
  json j = {{"left", a_text}, {"right", b_text}, {"cup", to_string(c, rs)}, {"degree", c.degree}};
  emit(out, o, j, a_text + " ∪ " + b_text + " = " + to_string(c, rs));
  return 0;
}

int cmd_coproduct(const Options& o, std::ostream& out) {
  Presentation p = load_presentation(o, "coproduct");
  RewriteSystem rs = compile(p);
  HopfStructure h = hopf_for(rs);
  if (o.inputs.empty()) {
    // No element: run the coproduct checks.
    Report r = check_coproduct(h, o.max_degree < 0 ? 8 : o.max_degree);
    if (o.format == "table") {
      out << r.to_table();
    } else {
      out << r.to_json() << '\n';
    }
    return r.passed() ? 0 : 1;
  }
  json rows = json::array();
  std::string table;
  for (const auto& text : o.inputs) {
    std::string r = to_string(coproduct(h, parse_element(text, p.field(), rs.table())));
    rows.push_back({{"input", text}, {"coproduct", r}});
    table += "Δ(" + text + ") = " + r + "\n";
  }
  emit(out, o, rows.size() == 1 ? rows[0] : rows, table);
  return 0;
}

int cmd_series(const Options& o, std::ostream& out) {
  const std::string& text = input(o, 0, "series expression");
  const int n = o.max_degree < 0 ? (o.oracle ? 8 : 16) : o.max_degree;
  const Field field = Field::parse(o.field);
  const SignPolicy policy = parse_sign_policy(o.sign_policy);
  AlgebraResolver resolve = [&](const std::string& name, int m) {
    PresetValue v = preset(name, field, policy);
    if (auto* schema = std::get_if<BasisSchema>(&v)) return series_of(*schema, m);
    const Presentation& p = std::get<Presentation>(v);
    return o.oracle ? oracle_series(p, m, oracle_options(o)) : series_of(compile(p), m);
  };
  PowerSeries s = evaluate_series(text, n, resolve);
  emit(out, o, json(s.coeffs()), to_string(s));
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  if (o.max_degree >= 0) v.max_degree = o.max_degree;
  v.seed = o.seed;
  v.max_words = o.max_words;
  VerifyResult r = run_verify_suite(o.suite, v);
  if (o.format == "table") {
    out << r.to_table();
  } else {
    out << r.to_json() << '\n';
  }
  return r.passed() ? 0 : 1;
}

int cmd_presets(const Options& o, std::ostream& out) {
  json j = json::array();
  std::ostringstream t;
  for (const auto& name : preset_names()) {
    PresetValue v = preset(name, Field::parse(o.field));
    const char* kind = std::holds_alternative<Presentation>(v) ? "presentation" : "basis schema";
    j.push_back({{"name", name}, {"kind", kind}, {"description", preset_description(name)}});
    t << std::left << std::setw(14) << name << std::setw(14) << kind << preset_description(name) << '\n';
  }
  emit(out, o, j, t.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pontryagin rings: normal forms, dimensions, coproducts and cup products", "pontryagin"};
  app.require_subcommand(1);
  Options o;

  auto* dims = app.add_subcommand("dims", "dimension of each degree");
  add_common(dims, o);
  add_degree(dims, o);
  add_oracle(dims, o);

  auto* nf = app.add_subcommand("nf", "normal form of elements");
  add_common(nf, o);
  nf->add_option("element", o.inputs, "element expressions, e.g. \"x1*t\"");

  auto* mul = app.add_subcommand("mul", "reduced product of two elements");
  add_common(mul, o);
  mul->add_option("operands", o.inputs, "two element expressions")->expected(2);

  auto* comm = app.add_subcommand("comm", "graded commutator of two elements, reduced");
  add_common(comm, o);
  comm->add_option("operands", o.inputs, "two element expressions")->expected(2);

  auto* basis = app.add_subcommand("basis", "normal-form basis words by degree");
  add_common(basis, o);
  add_degree(basis, o);

  auto* pr = app.add_subcommand("pair", "evaluate a dual element on an element");
  add_common(pr, o);
  pr->add_option("operands", o.inputs, "dual element and element")->expected(2);

  auto* cp = app.add_subcommand("cup", "cup product of two dual elements");
  add_common(cp, o);
  cp->add_option("operands", o.inputs, "two dual elements, e.g. \"dual(t)\"")->expected(2);

  auto* co = app.add_subcommand("coproduct", "coproduct of elements, or the coproduct checks when none is given");
  add_common(co, o);
  add_degree(co, o);
  co->add_option("element", o.inputs, "element expressions");

  auto* se = app.add_subcommand("series", "evaluate a Poincaré series expression");
  add_common(se, o);
  add_degree(se, o);
  add_oracle(se, o);
  se->add_option("expression", o.inputs, "e.g. \"james(q^2+q^3+q^4)*(1+q)\" or \"algebra(glambda)\"")->expected(1);

  auto* ve = app.add_subcommand("verify", "run the verification suite");
  ve->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(verify_suite_names()));
  ve->add_option("--seed", o.seed, "seed for sampled checks");
  ve->add_option("--max-words", o.max_words, "largest degree slice the linear algebra will build");
  ve->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
  add_degree(ve, o);

  auto* pl = app.add_subcommand("presets", "list built-in algebras");
  pl->add_option("--field", o.field, "coefficient field");
  pl->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    } else {
      err << "run with --help for usage\n";
    }
    return 2;
  }

  try {
    const std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "dims") return cmd_dims(o, out);
    if (verb == "nf") return cmd_nf(o, out);
    if (verb == "mul") return cmd_mul(o, out, false);
    if (verb == "comm") return cmd_mul(o, out, true);
    if (verb == "basis") return cmd_basis(o, out);
    if (verb == "pair") return cmd_pair(o, out);
    if (verb == "cup") return cmd_cup(o, out);
    if (verb == "coproduct") return cmd_coproduct(o, out);
    if (verb == "series") return cmd_series(o, out);
    if (verb == "verify") return cmd_verify(o, out);
    if (verb == "presets") return cmd_presets(o, out);
    err << "error: unknown verb " << verb << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pontryagin
