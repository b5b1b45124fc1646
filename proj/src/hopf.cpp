#include "pontryagin/hopf.hpp"

#include <cctype>
#include <sstream>

#include "pontryagin/errors.hpp"

namespace pontryagin {

template <std::size_t N>
std::string to_string(const Tensor<N>& t) {
  if (t.is_zero()) return "0";
  const Field& f = t.field();
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    Scalar mag = c;
    if (f.is_negative(c)) {
      out << (first ? "-" : " - ");
      mag = f.neg(c);
    } else if (!first) {
      out << " + ";
    }
    if (!f.is_one(mag)) out << f.format(mag) << '*';
    for (std::size_t i = 0; i < N; ++i) {
      if (i) out << " ⊗ ";
      out << format_word(*t.table(), key[i]);
    }
    first = false;
  }
  return out.str();
}

template std::string to_string(const Tensor<2>&);
template std::string to_string(const Tensor<3>&);

namespace {

Element nf_word(const RewriteSystem& rs, const Word& w, std::map<Word, Element>& cache) {
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  Element e = normal_form(rs, Element::monomial(rs.field(), rs.table(), w));
  cache.emplace(w, e);
  return e;
}

// Adds c * (e_0 ⊗ ... ⊗ e_{N-1}) to out.
template <std::size_t N>
void add_product(Tensor<N>& out, const std::vector<Element>& factors, const Scalar& c) {
  const Field& f = out.field();
  typename Tensor<N>::Key key;
  auto rec = [&](auto&& self, std::size_t i, const Scalar& acc) -> void {
    if (i == N) {
      out.add_term(key, acc);
      return;
    }
    for (const auto& [w, x] : factors[i].terms()) {
      key[i] = w;
      self(self, i + 1, f.mul(acc, x));
    }
  };
  rec(rec, 0, c);
}

}  // namespace

template <std::size_t N>
Tensor<N> multiply(const RewriteSystem& rs, const Tensor<N>& a, const Tensor<N>& b) {
  const Field& f = rs.field();
  Tensor<N> out(f, rs.table());
  std::map<Word, Element> cache;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      std::int64_t exponent = 0;
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < i; ++j) exponent += static_cast<std::int64_t>(ka[i].degree()) * kb[j].degree();
      }
      std::vector<Element> factors;
      bool zero = false;
      for (std::size_t i = 0; i < N && !zero; ++i) {
        factors.push_back(nf_word(rs, ka[i] * kb[i], cache));
        zero = factors.back().is_zero();
      }
      if (zero) continue;
      add_product(out, factors, f.mul(f.sign(exponent), f.mul(ca, cb)));
    }
  }
  return out;
}

template Tensor<2> multiply(const RewriteSystem&, const Tensor<2>&, const Tensor<2>&);
template Tensor<3> multiply(const RewriteSystem&, const Tensor<3>&, const Tensor<3>&);

TensorElement tensor(const Element& a, const Element& b) {
  a.require_compatible(b);
  TensorElement t(a.field(), a.table());
  add_product<2>(t, {a, b}, a.field().one());
  return t;
}

namespace {

TensorElement unit_tensor(const RewriteSystem& rs) {
  TensorElement t(rs.field(), rs.table());
  t.add_term({Word{}, Word{}}, rs.field().one());
  return t;
}

TensorElement word_coproduct(const RewriteSystem& rs, const std::vector<TensorElement>& letter_delta, const Word& w) {
  TensorElement acc = unit_tensor(rs);
  for (Letter l : w.letters()) acc = multiply(rs, acc, letter_delta[l]);
  return acc;
}

TensorElement element_coproduct(const RewriteSystem& rs, const std::vector<TensorElement>& letter_delta,
                                const Element& e) {
  Element lifted = rs.lift(e);
  Degree deg = degree(lifted);
  if (deg.kind == Degree::Kind::Mixed) throw HomogeneityError("coproduct needs a homogeneous element: " + to_string(e));
  const Field& f = rs.field();
  TensorElement out(f, rs.table());
  for (const auto& [w, c] : lifted.terms()) {
    TensorElement dw = word_coproduct(rs, letter_delta, w);
    for (const auto& [k, x] : dw.terms()) out.add_term(k, f.mul(c, x));
  }
  return out;
}

}  // namespace

HopfStructure::HopfStructure(RewriteSystem rs, std::vector<TensorElement> delta) : rs_(std::move(rs)) {
  const GeneratorTable& ext = *rs_.table();
  const std::size_t k = rs_.derived_letters();
  if (delta.size() != rs_.base().table()->size()) {
    throw PresentationError("coproduct needs one value per generator: got " + std::to_string(delta.size()) +
                            ", expected " + std::to_string(rs_.base().table()->size()));
  }
  const Field& f = rs_.field();
  letter_delta_.assign(ext.size(), TensorElement(f, rs_.table()));
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto l = static_cast<Letter>(i + k);
    const Word g = Word::single(ext, l);
    const std::string name = ext.name(l);
    if (!same_table(delta[i].table(), rs_.table()) || !(delta[i].field() == f)) {
      throw IncompatibleContext("coproduct of " + name + " is not over the extended generator table");
    }
    for (const auto& [key, c] : delta[i].terms()) {
      if (key[0].degree() + key[1].degree() != g.degree()) {
        throw PresentationError("coproduct of " + name + " has a term of the wrong degree: " + to_string(delta[i]));
      }
      const bool edge = key[0].empty() || key[1].empty();
      if (edge && !(f.is_one(c) && (key[0] == g || key[1] == g))) {
        throw PresentationError("coproduct of " + name + " violates the counit axiom: " + to_string(delta[i]));
      }
    }
    if (!f.is_one(delta[i].coefficient({g, Word{}})) || !f.is_one(delta[i].coefficient({Word{}, g}))) {
      throw PresentationError("coproduct of " + name + " must contain " + name + " ⊗ 1 + 1 ⊗ " + name);
    }
    letter_delta_[l] = std::move(delta[i]);
  }
  for (std::size_t l = 0; l < k; ++l) {
    letter_delta_[l] = element_coproduct(rs_, letter_delta_, rs_.embedding(static_cast<Letter>(l)));
  }
  for (const auto& r : rs_.base().expanded_relations()) {
    TensorElement d = element_coproduct(rs_, letter_delta_, r);
    if (!d.is_zero()) {
      throw PresentationError("coproduct does not kill the relation " + to_string(r) + ": it maps to " + to_string(d));
    }
  }
}

HopfStructure HopfStructure::standard(RewriteSystem rs) {
  const GeneratorTable& base = *rs.base().table();
  const std::size_t k = rs.derived_letters();
  const Field& f = rs.field();
  std::vector<TensorElement> delta;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& gen = base[static_cast<Letter>(i)];
    const Word g = Word::single(*rs.table(), static_cast<Letter>(i + k));
    TensorElement d(f, rs.table());
    d.add_term({g, Word{}}, f.one());
    d.add_term({Word{}, g}, f.one());
    if (f.characteristic() == 2 && gen.degree == 2 && gen.name.size() >= 2 && gen.name.back() == '2') {
      std::string partner = gen.name.substr(0, gen.name.size() - 1) + "1";
      if (auto p = base.find(partner); p && base.degree(*p) == 1) {
        const Word g1 = Word::single(*rs.table(), static_cast<Letter>(*p + k));
        d.add_term({g1, g1}, f.one());
      }
    }
    delta.push_back(std::move(d));
  }
  return HopfStructure(std::move(rs), std::move(delta));
}

TensorElement coproduct(const HopfStructure& h, const Element& e) {
  return element_coproduct(h.rewrite_system(), h.deltas(), e);
}

// ---------------------------------------------------------------------------
// duals

DualElement dual_of(const RewriteSystem& rs, const Word& basis_word) {
  DualElement a;
  a.degree = basis_word.degree();
  a.coords.emplace(basis_word, rs.field().one());
  return a;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

DualElement parse_dual(std::string_view text, const RewriteSystem& rs) {
  const Field& f = rs.field();
  DualElement out;
  bool have_degree = false;
  // Split into signed terms at top-level + and -.
  std::vector<std::pair<bool, std::string_view>> terms;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : '+';
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      auto piece = trim(text.substr(start, i - start));
      if (!piece.empty()) {
        terms.emplace_back(negative, piece);
      } else if (i != 0 && i != text.size()) {
        throw ParseError("empty term in '" + std::string(text) + "'");
      }
      negative = ch == '-';
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
  if (terms.empty()) throw ParseError("empty dual element");
  if (terms.size() == 1 && terms[0].second == "0" && !terms[0].first) return out;

  for (const auto& [neg, term] : terms) {
    auto pos = term.find("dual(");
    if (pos == std::string_view::npos || term.back() != ')') {
      throw ParseError("expected dual(<basis word>) in '" + std::string(term) + "'");
    }
    Scalar c = f.one();
    auto coeff = trim(term.substr(0, pos));
    if (!coeff.empty()) {
      if (coeff.back() != '*') throw ParseError("expected '*' after the coefficient in '" + std::string(term) + "'");
      c = f.parse_scalar(trim(coeff.substr(0, coeff.size() - 1)));
    }
    if (neg) c = f.neg(c);
    auto inner = trim(term.substr(pos + 5, term.size() - pos - 6));
    Element e = parse_element(inner, f, rs.table());
    if (e.size() != 1 || !f.is_one(e.terms().begin()->second)) {
      throw ParseError("dual(...) takes a single word, got '" + std::string(inner) + "'");
    }
    const Word& w = e.terms().begin()->first;
    if (rs.find_redex(w)) {
      throw ParseError("'" + std::string(inner) + "' is not a basis word; its normal form is " +
                       to_string(normal_form(rs, e)));
    }
    if (have_degree && w.degree() != out.degree) {
      throw HomogeneityError("dual element mixes degrees " + std::to_string(out.degree) + " and " +
                             std::to_string(w.degree()));
    }
    out.degree = w.degree();
    have_degree = true;
    auto [it, inserted] = out.coords.try_emplace(w, c);
    if (!inserted) {
      it->second = f.add(it->second, c);
      if (f.is_zero(it->second)) out.coords.erase(it);
    }
  }
  return out;
}

std::string to_string(const DualElement& a, const RewriteSystem& rs) {
  if (a.is_zero()) return "0";
  const Field& f = rs.field();
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : a.coords) {
    Scalar mag = c;
    if (f.is_negative(c)) {
      out << (first ? "-" : " - ");
      mag = f.neg(c);
    } else if (!first) {
      out << " + ";
    }
    if (!f.is_one(mag)) out << f.format(mag) << '*';
    out << "dual(" << format_word(*rs.table(), w) << ")";
    first = false;
  }
  return out.str();
}

Scalar pair(const DualElement& a, const Element& e, const RewriteSystem& rs) {
  const Field& f = rs.field();
  Degree deg = degree(e);
  if (deg.kind == Degree::Kind::Zero) return f.zero();
  if (!deg.is_homogeneous() || deg.value != a.degree) {
    throw HomogeneityError("cannot pair a degree-" + std::to_string(a.degree) + " dual element with " + to_string(e));
  }
  Element nf = normal_form(rs, e);
  Scalar total = f.zero();
  for (const auto& [w, c] : a.coords) total = f.add(total, f.mul(c, nf.coefficient(w)));
  return total;
}

DualElement cup(const DualElement& a, const DualElement& b, const HopfStructure& h) {
  const RewriteSystem& rs = h.rewrite_system();
  const Field& f = rs.field();
  DualElement out;
  out.degree = a.degree + b.degree;
  if (a.is_zero() || b.is_zero()) return out;
  for (const Word& c : basis_words(rs, out.degree)) {
    TensorElement d = coproduct(h, Element::monomial(f, rs.table(), c));
    Scalar total = f.zero();
    for (const auto& [key, x] : d.terms()) {
      if (key[0].degree() != a.degree) continue;
      auto ia = a.coords.find(key[0]);
      auto ib = b.coords.find(key[1]);
      if (ia == a.coords.end() || ib == b.coords.end()) continue;
      Scalar s = f.sign(static_cast<std::int64_t>(b.degree) * key[0].degree());
      total = f.add(total, f.mul(s, f.mul(x, f.mul(ia->second, ib->second))));
    }
    if (!f.is_zero(total)) out.coords.emplace(c, total);
  }
  return out;
}

std::optional<int> nilpotency_order(const DualElement& a, const HopfStructure& h, int bound) {
  if (a.is_zero()) return 1;
  DualElement power = a;
  for (int k = 2; k <= bound; ++k) {
    power = cup(power, a, h);
    if (power.is_zero()) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// checks

Report check_coproduct(const HopfStructure& h, int dmax) {
  Report report("coproduct checks");
  const RewriteSystem& rs = h.rewrite_system();
  const Field& f = rs.field();
  const GeneratorTable& table = *rs.table();

  for (const auto& r : rs.base().expanded_relations()) {
    const int d = degree(r).value;
    if (d > dmax) continue;
    TensorElement t = coproduct(h, r);
    report.add("relation killed", d, to_string(r) + (t.is_zero() ? "" : " -> " + to_string(t)), t.is_zero());
  }
  for (const auto& rule : rs.rules()) {
    const int d = rule.lhs.degree();
    if (d > dmax) continue;
    TensorElement t = coproduct(h, Element::monomial(f, rs.table(), rule.lhs) - rule.rhs);
    report.add("rule killed", d,
               format_word(table, rule.lhs) + " -> " + to_string(rule.rhs) + (t.is_zero() ? "" : ": " + to_string(t)),
               t.is_zero());
  }

  std::map<Word, TensorElement> cache;
  auto delta_of = [&](const Word& w) -> const TensorElement& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, coproduct(h, Element::monomial(f, rs.table(), w))).first;
    return it->second;
  };

  for (int d = 1; d <= dmax; ++d) {
    auto words = basis_words(rs, d);
    std::string coassoc_fail, counit_fail;
    std::size_t noncocommutative = 0;
    std::string cocommutative_witness;
    for (const Word& c : words) {
      const TensorElement& dc = delta_of(c);
      Tensor<3> left(f, rs.table()), right(f, rs.table());
      for (const auto& [key, x] : dc.terms()) {
        for (const auto& [k2, y] : delta_of(key[0]).terms()) left.add_term({k2[0], k2[1], key[1]}, f.mul(x, y));
        for (const auto& [k2, y] : delta_of(key[1]).terms()) right.add_term({key[0], k2[0], k2[1]}, f.mul(x, y));
      }
      if (coassoc_fail.empty() && !(left == right)) {
        coassoc_fail = format_word(table, c) + ": " + to_string(left) + " vs " + to_string(right);
      }
      // Counit: the terms with an empty factor are exactly c ⊗ 1 and 1 ⊗ c.
      Element lc(f, rs.table()), rc(f, rs.table());
      for (const auto& [key, x] : dc.terms()) {
        if (key[1].empty()) lc.add_term(key[0], x);
        if (key[0].empty()) rc.add_term(key[1], x);
      }
      Element expected = Element::monomial(f, rs.table(), c);
      if (counit_fail.empty() && !(lc == expected && rc == expected)) {
        counit_fail = format_word(table, c) + ": " + to_string(dc);
      }
      TensorElement swapped(f, rs.table());
      for (const auto& [key, x] : dc.terms()) {
        swapped.add_term({key[1], key[0]},
                         f.mul(x, f.sign(static_cast<std::int64_t>(key[0].degree()) * key[1].degree())));
      }
      if (!(swapped == dc)) {
        if (noncocommutative++ == 0) cocommutative_witness = format_word(table, c) + ": Δ = " + to_string(dc);
      }
    }
    const std::string n = std::to_string(words.size()) + " basis words";
    report.add("coassociative", d, coassoc_fail.empty() ? n : coassoc_fail, coassoc_fail.empty());
    report.add("counit", d, counit_fail.empty() ? n : counit_fail, counit_fail.empty());
    if (noncocommutative == 0) {
      report.info("cocommutative", d, "holds on all " + n);
    } else {
      report.info("cocommutative", d,
                  "fails on " + std::to_string(noncocommutative) + " of " + n + ", e.g. " + cocommutative_witness);
    }
  }
  return report;
}

Element kunneth_image(const TensorElement& t, const RewriteSystem& target,
                      const std::map<std::string, std::string>& left_names,
                      const std::map<std::string, std::string>& right_names) {
  const Field& f = target.field();
  const GeneratorTable& src = *t.table();
  const GeneratorTable& dst = *target.table();
  auto rename = [&](const Word& w, const std::map<std::string, std::string>& names) {
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
      const std::string& n = src.name(l);
      auto it = names.find(n);
      out.push_back(dst.letter(it == names.end() ? n : it->second));
    }
    return Word(dst, out);
  };
  Element sum(f, target.table());
  for (const auto& [key, c] : t.terms()) sum.add_term(rename(key[0], left_names) * rename(key[1], right_names), c);
  return normal_form(target, sum);
}

}  // namespace pontryagin
