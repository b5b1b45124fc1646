#include "pontryagin/element.hpp"

#include <charconv>
#include <vector>

#include "pontryagin/errors.hpp"

namespace pontryagin {

Element::Element(Field field, TablePtr table) : field_(field), table_(std::move(table)) {}

Element Element::monomial(Field field, TablePtr table, Word w, const Scalar& c) {
  Element e(field, std::move(table));
  e.add_term(w, c);
  return e;
}

Element Element::monomial(Field field, TablePtr table, Word w) {
  return monomial(field, std::move(table), std::move(w), field.one());
}

Element Element::unit(Field field, TablePtr table) { return monomial(field, std::move(table), Word{}); }

Element Element::generator(Field field, TablePtr table, std::string_view name) {
  Letter l = table->letter(name);
  Word w = Word::single(*table, l);
  return monomial(field, std::move(table), std::move(w));
}

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Element::add_term(const Word& w, const Scalar& c) {
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

Element Element::scaled(const Scalar& c) const {
  Element r(field_, table_);
  if (field_.is_zero(c)) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, field_.mul(x, c));
  return r;
}

void Element::require_compatible(const Element& other) const {
  if (!(field_ == other.field_)) {
    throw IncompatibleContext("field mismatch: " + field_.name() + " vs " + other.field_.name());
  }
  if (!same_table(table_, other.table_)) throw IncompatibleContext("generator table mismatch");
}

bool Element::operator==(const Element& other) const {
  return field_ == other.field_ && same_table(table_, other.table_) && terms_ == other.terms_;
}

Element add(const Element& a, const Element& b) {
  a.require_compatible(b);
  Element r = a;
  for (const auto& [w, c] : b.terms()) r.add_term(w, c);
  return r;
}

Element sub(const Element& a, const Element& b) { return add(a, -b); }

Element operator-(const Element& a) { return a.scaled(a.field().neg(a.field().one())); }

Element mul(const Element& a, const Element& b) {
  a.require_compatible(b);
  const Field& f = a.field();
  Element r(f, a.table());
  for (const auto& [u, x] : a.terms()) {
    for (const auto& [v, y] : b.terms()) r.add_term(u * v, f.mul(x, y));
  }
  return r;
}

Degree degree(const Element& e) {
  if (e.is_zero()) return {};
  int d = e.terms().begin()->first.degree();
  if (e.terms().rbegin()->first.degree() != d) return {Degree::Kind::Mixed, 0};
  return {Degree::Kind::Homogeneous, d};
}

Element graded_commutator(const Element& a, const Element& b) {
  a.require_compatible(b);
  Degree da = degree(a), db = degree(b);
  if (da.kind == Degree::Kind::Mixed || db.kind == Degree::Kind::Mixed) {
    throw HomogeneityError("graded commutator needs homogeneous arguments");
  }
  if (a.is_zero() || b.is_zero()) return Element(a.field(), a.table());
  const Field& f = a.field();
  return mul(a, b) - mul(b, a).scaled(f.sign(static_cast<std::int64_t>(da.value) * db.value));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_scalar_token(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/')) return false;
  }
  return true;
}

// One term: factors separated by '*'.  Numeric factors multiply the
// coefficient, names append letters, "name^k" repeats a letter.
void parse_term(std::string_view term, bool negative, const Field& field, const GeneratorTable& table,
                Element& out) {
  term = trim(term);
  if (term.empty()) throw ParseError("empty term");
  Scalar coeff = negative ? field.neg(field.one()) : field.one();
  std::vector<Letter> letters;
  std::size_t start = 0;
  while (start <= term.size()) {
    std::size_t star = term.find('*', start);
    std::string_view factor = trim(term.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    if (factor.empty()) throw ParseError("empty factor in '" + std::string(term) + "'");
    if (is_scalar_token(factor)) {
      coeff = field.mul(coeff, field.parse_scalar(factor));
    } else {
      int power = 1;
      auto caret = factor.find('^');
      std::string_view name = trim(factor.substr(0, caret));
      if (caret != std::string_view::npos) {
        auto exp = trim(factor.substr(caret + 1));
        auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), power);
        if (ec != std::errc() || ptr != exp.data() + exp.size() || power < 0) {
          throw ParseError("bad exponent in '" + std::string(factor) + "'");
        }
      }
      if (!is_identifier(name)) throw ParseError("malformed factor '" + std::string(factor) + "'");
      Letter l = table.letter(name);
      for (int i = 0; i < power; ++i) letters.push_back(l);
    }
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  out.add_term(Word(table, std::move(letters)), coeff);
}

}  // namespace

Element parse_element(std::string_view text, const Field& field, const TablePtr& table) {
  Element out(field, table);
  text = trim(text);
  if (text.empty()) throw ParseError("empty element expression");
  bool negative = false;
  std::size_t term_start = 0;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    term_start = i = 1;
  }
  for (; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '+' || text[i] == '-') {
      parse_term(text.substr(term_start, i - term_start), negative, field, *table, out);
      if (i < text.size()) {
        negative = text[i] == '-';
        term_start = i + 1;
      }
    }
  }
  return out;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  const Field& f = e.field();
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    bool negative = f.is_negative(c);
    Scalar magnitude = negative ? f.neg(c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += f.format(magnitude);
    } else if (f.is_one(magnitude)) {
      out += format_word(*e.table(), w);
    } else {
      out += f.format(magnitude) + "*" + format_word(*e.table(), w);
    }
  }
  return out;
}

Element transport(const Element& e, const TablePtr& target, std::span<const Letter> letter_map) {
  Element r(e.field(), target);
  std::vector<Letter> buf;
  for (const auto& [w, c] : e.terms()) {
    buf.clear();
    for (Letter l : w.letters()) buf.push_back(letter_map[l]);
    r.add_term(Word(*target, buf), c);
  }
  return r;
}

Element substitute(const Element& e, std::span<const Element> images, const Field& field, const TablePtr& target) {
  Element r(field, target);
  for (const auto& [w, c] : e.terms()) {
    Element term = Element::monomial(field, target, Word{}, c);
    for (Letter l : w.letters()) term = mul(term, images[l]);
    r = add(r, term);
  }
  return r;
}

}  // namespace pontryagin
