#include "pontryagin/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <json.hpp>

#include "pontryagin/errors.hpp"

namespace pontryagin {

std::string to_string(SignPolicy policy) { return policy == SignPolicy::Strict ? "strict" : "koszul"; }

SignPolicy parse_sign_policy(std::string_view text) {
  if (text == "strict") return SignPolicy::Strict;
  if (text == "koszul") return SignPolicy::Koszul;
  throw ParseError("unknown sign policy '" + std::string(text) + "' (expected strict or koszul)");
}

Scalar commutation_sign(SignPolicy policy, const Field& field, int deg_a, int deg_b) {
  if (policy == SignPolicy::Strict) return field.one();
  return field.sign(static_cast<std::int64_t>(deg_a) * deg_b);
}

Presentation::Presentation(Field field, TablePtr table, std::vector<Element> relations, std::vector<std::string> central,
                           SignPolicy policy)
    : field_(field), table_(std::move(table)), relations_(std::move(relations)), central_(std::move(central)),
      policy_(policy) {
  for (const auto& r : relations_) {
    if (!(r.field() == field_) || !same_table(r.table(), table_)) {
      throw PresentationError("relation '" + to_string(r) + "' is not over the presentation's field and generators");
    }
    if (r.is_zero()) throw PresentationError("relations must be nonzero");
    if (!degree(r).is_homogeneous()) throw PresentationError("relation '" + to_string(r) + "' is not homogeneous");
  }
  std::set<std::string> seen;
  for (const auto& c : central_) {
    if (!table_->find(c)) throw PresentationError("central generator '" + c + "' is not a generator");
    if (!seen.insert(c).second) throw PresentationError("central generator '" + c + "' listed twice");
  }

  expanded_ = relations_;
  std::vector<bool> is_central(table_->size(), false);
  for (const auto& c : central_) is_central[*table_->find(c)] = true;
  for (std::size_t ci = 0; ci < table_->size(); ++ci) {
    if (!is_central[ci]) continue;
    auto c = static_cast<Letter>(ci);
    for (std::size_t gi = 0; gi < table_->size(); ++gi) {
      auto g = static_cast<Letter>(gi);
      if (g == c || (is_central[g] && g > c)) continue;
      Word gc(*table_, std::vector<Letter>{g, c});
      Word cg(*table_, std::vector<Letter>{c, g});
      Element rel = Element::monomial(field_, table_, gc);
      rel.add_term(cg, field_.neg(commutation_sign(policy_, field_, table_->degree(g), table_->degree(c))));
      if (!rel.is_zero()) expanded_.push_back(std::move(rel));
    }
  }
}

Presentation Presentation::with_family(CommutatorFamily family) const {
  auto check = [&](const std::string& n) {
    if (!table_->find(n)) throw PresentationError("family letter '" + n + "' is not a generator");
  };
  check(family.circle);
  for (const auto& x : family.rotations) check(x);
  Presentation p = *this;
  p.family_ = std::move(family);
  return p;
}

Presentation Presentation::with_warning(std::string warning) const {
  Presentation p = *this;
  p.warnings_.push_back(std::move(warning));
  return p;
}

Presentation exterior_algebra(const std::vector<Generator>& gens, const Field& field, SignPolicy policy) {
  auto table = make_table(gens);
  std::vector<Element> rels;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto li = static_cast<Letter>(i);
    rels.push_back(Element::monomial(field, table, Word(*table, std::vector<Letter>{li, li})));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto li = static_cast<Letter>(i), lj = static_cast<Letter>(j);
      Element r = Element::monomial(field, table, Word(*table, std::vector<Letter>{li, lj}));
      r.add_term(Word(*table, std::vector<Letter>{lj, li}),
                 field.neg(commutation_sign(policy, field, gens[i].degree, gens[j].degree)));
      if (!r.is_zero()) rels.push_back(std::move(r));
    }
  }
  return Presentation(field, table, std::move(rels), {}, policy);
}

Presentation truncated_polynomial(const std::string& name, int degree, int order, const Field& field) {
  if (order < 2) throw PresentationError("truncation order must be at least 2, got " + std::to_string(order));
  auto table = make_table({{name, degree}});
  Word power(*table, std::vector<Letter>(static_cast<std::size_t>(order), Letter{0}));
  Presentation p(field, table, {Element::monomial(field, table, power)});
  if (std::uint64_t c = field.characteristic(); c > 0) {
    std::uint64_t k = 1;
    while (k < static_cast<std::uint64_t>(order)) k *= c;
    if (k != static_cast<std::uint64_t>(order)) {
      p = p.with_warning("truncation order " + std::to_string(order) + " is not a power of the characteristic " +
                         std::to_string(c) + "; such an algebra cannot carry a Hopf structure");
    }
  }
  return p;
}

Presentation tensor_product(const Presentation& p, const Presentation& q) {
  if (!(p.field() == q.field())) {
    throw IncompatibleContext("tensor product over different fields: " + p.field().name() + " and " +
                              q.field().name());
  }
  const Field& field = p.field();
  std::vector<Generator> gens = p.table()->generators();
  for (const auto& g : q.table()->generators()) {
    if (p.table()->find(g.name)) {
      throw PresentationError("generator name collision '" + g.name + "': rename required before tensoring");
    }
    gens.push_back(g);
  }
  auto table = make_table(gens);
  const auto np = p.table()->size();
  const auto nq = q.table()->size();
  std::vector<Letter> map_p(np), map_q(nq);
  for (std::size_t i = 0; i < np; ++i) map_p[i] = static_cast<Letter>(i);
  for (std::size_t i = 0; i < nq; ++i) map_q[i] = static_cast<Letter>(np + i);

  std::vector<Element> rels;
  for (const auto& r : p.relations()) rels.push_back(transport(r, table, map_p));
  for (const auto& r : q.relations()) rels.push_back(transport(r, table, map_q));
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      Letter g = map_p[i], h = map_q[j];
      Element r = Element::monomial(field, table, Word(*table, std::vector<Letter>{g, h}));
      r.add_term(Word(*table, std::vector<Letter>{h, g}),
                 field.neg(commutation_sign(p.sign_policy(), field, table->degree(g), table->degree(h))));
      rels.push_back(std::move(r));
    }
  }
  std::vector<std::string> central = p.central();
  central.insert(central.end(), q.central().begin(), q.central().end());
  Presentation out(field, table, std::move(rels), std::move(central), p.sign_policy());
  for (const auto& w : p.warnings()) out = out.with_warning(w);
  for (const auto& w : q.warnings()) out = out.with_warning(w);
  return out;
}

Presentation free_algebra(const std::vector<Generator>& gens, const Field& field) {
  return Presentation(field, make_table(gens), {});
}

// ---------------------------------------------------------------------------
// Basis schemas

std::vector<std::string> BasisSchema::labels(int degree) const {
  std::vector<std::string> out;
  int inner = degree - shift;
  if (inner < 0) return out;

  std::vector<std::string> tails;
  std::vector<int> tail_degrees;
  const std::size_t nt = exterior_tail.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << nt); ++mask) {
    std::string label;
    int d = 0;
    for (std::size_t i = 0; i < nt; ++i) {
      if (mask & (std::size_t{1} << i)) {
        if (!label.empty()) label += '*';
        label += exterior_tail[i].name;
        d += exterior_tail[i].degree;
      }
    }
    tails.push_back(label);
    tail_degrees.push_back(d);
  }

  std::vector<std::string> prefix;
  std::function<void(int, std::string&)> walk = [&](int remaining, std::string& current) {
    for (std::size_t k = 0; k < tails.size(); ++k) {
      if (tail_degrees[k] != remaining) continue;
      std::string label = current;
      if (!tails[k].empty()) label += (label.empty() ? "" : "*") + tails[k];
      if (label.empty()) {
        if (reduced) continue;
        label = "1";
      }
      out.push_back(shift > 0 ? "s" + std::to_string(shift) + "*" + label : label);
    }
    for (const auto& g : free_letters) {
      if (g.degree > remaining) continue;
      std::string next = current.empty() ? g.name : current + "*" + g.name;
      walk(remaining - g.degree, next);
    }
  };
  std::string empty;
  walk(inner, empty);
  return out;
}

// ---------------------------------------------------------------------------
// Presets

namespace {

bool char2(const Field& f) { return f.characteristic() == 2; }

Presentation so3(const Field& field, const std::string& letter) {
  if (char2(field)) return exterior_algebra({{letter + "1", 1}, {letter + "2", 2}}, field);
  return exterior_algebra({{letter + "3", 3}}, field);
}

Presentation glambda(const Field& field, SignPolicy policy) {
  if (char2(field)) {
    auto table = make_table({{"t", 1}, {"x1", 1}, {"x2", 2}, {"y1", 1}, {"y2", 2}});
    std::vector<Element> rels;
    for (const char* r : {"t*t", "x1*x1", "x2*x2", "x1*x2 + x2*x1", "y1*y1", "y2*y2"}) {
      rels.push_back(parse_element(r, field, table));
    }
    return Presentation(field, table, std::move(rels), {"y1", "y2"}, policy)
        .with_family({"t", {"x1", "x2"}});
  }
  auto table = make_table({{"t", 1}, {"x3", 3}, {"y3", 3}});
  std::vector<Element> rels;
  for (const char* r : {"t*t", "x3*x3", "y3*y3"}) rels.push_back(parse_element(r, field, table));
  return Presentation(field, table, std::move(rels), {"y3"}, policy).with_family({"t", {"x3"}});
}

Presentation loops_model(const Field& field) {
  std::vector<Generator> ws = char2(field) ? std::vector<Generator>{{"w1", 2}, {"w2", 3}, {"w3", 4}}
                                           : std::vector<Generator>{{"w3", 4}};
  Presentation p = tensor_product(free_algebra(ws, field), exterior_algebra({{"t", 1}}, field));
  p = tensor_product(p, so3(field, "y"));
  return tensor_product(p, so3(field, "x"));
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"so3",         "k0",          "k1",           "glambda",
                                                  "u0_model",    "u1_model",    "smash_s1_so3", "loops_model"};
  return names;
}

std::string preset_description(std::string_view name) {
  if (name == "so3") return "homology ring of SO(3): Lambda(x1,x2) over F2, Lambda(x3) otherwise";
  if (name == "k0") return "SO(3) x SO(3): Lambda(x1,x2) (x) Lambda(z1,z2) over F2";
  if (name == "k1") return "S^1 x SO(3): Lambda(t) (x) Lambda(y1,y2) over F2";
  if (name == "glambda") return "Pontryagin ring Lambda(y) (x) F<t,x>/R of the symplectomorphism group";
  if (name == "u0_model") return "basis schema v_I t^e of the open stratum";
  if (name == "u1_model") return "basis schema u_I x^e of the codimension-2 stratum";
  if (name == "smash_s1_so3") return "reduced homology of S^1 smash SO(3)";
  if (name == "loops_model") return "product model: tensor algebra (x) Lambda(t) (x) H(SO(3)) (x) H(SO(3))";
  throw PresentationError("unknown preset '" + std::string(name) + "'");
}

PresetValue preset(std::string_view name, const Field& field, SignPolicy policy) {
  const bool c2 = char2(field);
  if (name == "so3") return so3(field, "x");
  if (name == "k0") return tensor_product(so3(field, "x"), so3(field, "z"));
  if (name == "k1") return tensor_product(exterior_algebra({{"t", 1}}, field), so3(field, "y"));
  if (name == "glambda") return glambda(field, policy);
  if (name == "loops_model") return loops_model(field);
  if (name == "u0_model") {
    return BasisSchema{"u0_model", c2 ? std::vector<Generator>{{"v1", 2}, {"v2", 3}, {"v3", 4}}
                                      : std::vector<Generator>{{"v3", 4}},
                       {{"t", 1}}, false, 0};
  }
  if (name == "u1_model") {
    return BasisSchema{"u1_model", c2 ? std::vector<Generator>{{"u1", 2}, {"u2", 3}, {"u3", 4}}
                                      : std::vector<Generator>{{"u3", 4}},
                       c2 ? std::vector<Generator>{{"x1", 1}, {"x2", 2}} : std::vector<Generator>{{"x3", 3}}, false, 0};
  }
  if (name == "smash_s1_so3") {
    return BasisSchema{"smash_s1_so3", {},
                       c2 ? std::vector<Generator>{{"x1", 1}, {"x2", 2}} : std::vector<Generator>{{"x3", 3}}, true,
                       1};
  }
  throw PresentationError("unknown preset '" + std::string(name) + "'");
}

Presentation preset_presentation(std::string_view name, const Field& field, SignPolicy policy) {
  auto v = preset(name, field, policy);
  if (auto* p = std::get_if<Presentation>(&v)) return *p;
  throw PresentationError("preset '" + std::string(name) + "' is a basis schema, not a presentation");
}

// ---------------------------------------------------------------------------
// JSON

Presentation parse_presentation_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what());
  }
  try {
    Field field = Field::parse(j.at("field").get<std::string>());
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators")) gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    auto table = make_table(std::move(gens));
    std::vector<Element> rels;
    for (const auto& r : j.value("relations", nlohmann::json::array())) {
      rels.push_back(parse_element(r.get<std::string>(), field, table));
    }
    auto central = j.value("central", std::vector<std::string>{});
    SignPolicy policy = parse_sign_policy(j.value("sign_policy", std::string("strict")));
    Presentation p(field, table, std::move(rels), std::move(central), policy);
    if (j.contains("family")) {
      const auto& f = j.at("family");
      p = p.with_family({f.at("circle").get<std::string>(), f.at("rotations").get<std::vector<std::string>>()});
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what());
  }
}

std::string presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["field"] = p.field().name();
  j["generators"] = nlohmann::json::array();
  for (const auto& g : p.table()->generators()) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
  j["relations"] = nlohmann::json::array();
  for (const auto& r : p.relations()) j["relations"].push_back(to_string(r));
  j["central"] = p.central();
  j["sign_policy"] = to_string(p.sign_policy());
  if (p.family()) j["family"] = {{"circle", p.family()->circle}, {"rotations", p.family()->rotations}};
  return j.dump();
}

}  // namespace pontryagin
