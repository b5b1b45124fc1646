#include "pontryagin/rewrite.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>

#include "pontryagin/errors.hpp"

namespace pontryagin {

RewriteSystem::RewriteSystem(Presentation base, TablePtr extended, std::vector<RewriteRule> rules,
                             std::vector<Element> embedding)
    : base_(std::move(base)), extended_(std::move(extended)), rules_(std::move(rules)),
      embedding_(std::move(embedding)) {
  by_first_.resize(extended_->size());
  by_last_.resize(extended_->size());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& lhs = rules_[i].lhs;
    if (lhs.empty()) throw OrientationError("rule with empty left side");
    for (const auto& [w, c] : rules_[i].rhs.terms()) {
      if (!(w < lhs) || w.degree() != lhs.degree()) {
        throw std::logic_error("rule " + format_word(*extended_, lhs) + " -> " + to_string(rules_[i].rhs) +
                               " does not decrease the monomial order");
      }
    }
    by_first_[lhs[0]].push_back(i);
    by_last_[lhs[lhs.size() - 1]].push_back(i);
  }
}

Element RewriteSystem::lift(const Element& e) const {
  if (!(e.field() == field())) throw IncompatibleContext("field mismatch: " + e.field().name() + " vs " + field().name());
  if (same_table(e.table(), extended_)) return e;
  if (same_table(e.table(), base_.table())) {
    std::vector<Letter> shift(base_.table()->size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = static_cast<Letter>(i + derived_letters());
    return transport(e, extended_, shift);
  }
  throw IncompatibleContext("element is over neither the base nor the extended generator table");
}

Element RewriteSystem::embed(const Element& e) const {
  if (derived_letters() == 0) return lift(e);
  if (same_table(e.table(), base_.table())) return e;
  Element lifted = lift(e);
  return substitute(lifted, embedding_, field(), base_.table());
}

std::optional<RewriteSystem::Redex> RewriteSystem::find_redex(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r : by_first_[w[pos]]) {
      if (w.matches_at(pos, rules_[r].lhs)) return Redex{pos, r};
    }
  }
  return std::nullopt;
}

namespace {

bool suffix_redex(const std::vector<std::vector<std::size_t>>& by_last, const std::vector<RewriteRule>& rules,
                  std::span<const Letter> w) {
  if (w.empty()) return false;
  for (std::size_t r : by_last[w.back()]) {
    const auto& lhs = rules[r].lhs.letters();
    if (lhs.size() <= w.size() && std::equal(lhs.begin(), lhs.end(), w.end() - static_cast<std::ptrdiff_t>(lhs.size()))) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool RewriteSystem::has_suffix_redex(const Word& w) const { return suffix_redex(by_last_, rules_, w.letters()); }

// ---------------------------------------------------------------------------
// compile

namespace {

// Orient each relation at its leading word, over `table` after mapping base
// letters through `shift`.
std::vector<RewriteRule> orient(const Presentation& p, const TablePtr& table, std::span<const Letter> shift) {
  std::vector<RewriteRule> rules;
  std::map<Word, std::size_t> seen;
  const Field& f = p.field();
  for (std::size_t i = 0; i < p.expanded_relations().size(); ++i) {
    Element r = transport(p.expanded_relations()[i], table, shift);
    auto lead = r.terms().rbegin();
    Word lhs = lead->first;
    Scalar lc_inv = f.inv(lead->second);
    if (auto it = seen.find(lhs); it != seen.end()) {
      throw OrientationError("relation '" + to_string(p.expanded_relations()[i]) +
                             "' has the same leading word as relation '" +
                             to_string(p.expanded_relations()[it->second]) + "'; orientation is ambiguous");
    }
    seen.emplace(lhs, i);
    Element rhs(f, table);
    for (const auto& [w, c] : r.terms()) {
      if (w == lhs) continue;
      rhs.add_term(w, f.neg(f.mul(c, lc_inv)));
    }
    rules.push_back({std::move(lhs), std::move(rhs)});
  }
  return rules;
}

RewriteSystem compile_generic(const Presentation& p) {
  std::vector<Letter> identity(p.table()->size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<Letter>(i);
  std::vector<Element> embedding;
  for (std::size_t i = 0; i < identity.size(); ++i) {
    embedding.push_back(Element::monomial(p.field(), p.table(), Word::single(*p.table(), static_cast<Letter>(i))));
  }
  auto rules = orient(p, p.table(), identity);
  return RewriteSystem(p, p.table(), std::move(rules), std::move(embedding));
}

struct RotationMonomial {
  std::vector<Letter> letters;  // base letters, increasing
  int degree = 0;
};

RewriteSystem compile_family(const Presentation& p) {
  const CommutatorFamily& fam = *p.family();
  const Field& f = p.field();
  const GeneratorTable& base = *p.table();
  const Letter t = base.letter(fam.circle);
  std::vector<Letter> xs;
  for (const auto& n : fam.rotations) xs.push_back(base.letter(n));
  std::sort(xs.begin(), xs.end());
  for (const auto& c : p.central()) {
    Letter l = base.letter(c);
    if (l == t || std::find(xs.begin(), xs.end(), l) != xs.end()) {
      throw OrientationError("central generator '" + c + "' cannot also be a commutator-family letter");
    }
  }

  // Nonzero monomials of the exterior algebra on the rotation letters.
  std::vector<RotationMonomial> monomials;
  for (std::size_t mask = 1; mask < (std::size_t{1} << xs.size()); ++mask) {
    RotationMonomial m;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        m.letters.push_back(xs[i]);
        m.degree += base.degree(xs[i]);
      }
    }
    monomials.push_back(std::move(m));
  }
  std::stable_sort(monomials.begin(), monomials.end(),
                   [](const RotationMonomial& a, const RotationMonomial& b) { return a.degree < b.degree; });

  // Derived letters w<deg>, placed before every base letter.
  std::vector<Generator> gens;
  std::map<int, int> per_degree;
  for (const auto& m : monomials) per_degree[m.degree]++;
  std::map<int, int> used;
  for (const auto& m : monomials) {
    std::string name = "w" + std::to_string(m.degree);
    if (per_degree[m.degree] > 1) name += "_" + std::to_string(++used[m.degree]);
    if (base.find(name)) name += "c";
    gens.push_back({name, m.degree + base.degree(t)});
  }
  const auto k = static_cast<Letter>(gens.size());
  for (const auto& g : base.generators()) gens.push_back(g);
  TablePtr ext = make_table(std::move(gens));

  std::vector<Letter> shift(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) shift[i] = static_cast<Letter>(i + k);
  auto X = [&](Letter base_letter) { return static_cast<Letter>(base_letter + k); };

  // Embedding of every extended letter into the base table.
  std::vector<Element> embedding;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const auto& m = monomials[i];
    Element mono = Element::monomial(f, p.table(), Word(base, m.letters));
    Element circle = p.generator(fam.circle);
    embedding.push_back(graded_commutator(mono, circle));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    embedding.push_back(Element::monomial(f, p.table(), Word::single(base, static_cast<Letter>(i))));
  }

  // Base rules, used below to multiply rotation monomials.
  std::vector<RewriteRule> rules = orient(p, ext, shift);
  RewriteSystem base_only(p, ext, rules, embedding);

  auto monomial_word = [&](const RotationMonomial& m) {
    std::vector<Letter> ls;
    for (Letter l : m.letters) ls.push_back(X(l));
    return Word(*ext, ls);
  };
  auto w_letter = [&](std::size_t i) { return Word::single(*ext, static_cast<Letter>(i)); };
  auto monomial_index = [&](const Word& w) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      if (monomial_word(monomials[i]) == w) return i;
    }
    return std::nullopt;
  };
  const Word tw = Word::single(*ext, X(t));
  const int dt = base.degree(t);
  auto single_x = [&](Letter x) {
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      if (monomials[i].letters.size() == 1 && monomials[i].letters[0] == x) return i;
    }
    throw std::logic_error("missing rotation monomial");
  };

  // x t -> s t x + w_x,  s = (-1)^{|x||t|}
  for (Letter x : xs) {
    Word xw = Word::single(*ext, X(x));
    Element rhs = Element::monomial(f, ext, tw * xw, f.sign(static_cast<std::int64_t>(base.degree(x)) * dt));
    rhs.add_term(w_letter(single_x(x)), f.one());
    rules.push_back({xw * tw, std::move(rhs)});
  }
  // t w_m -> -s_m w_m t
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    Scalar s = f.sign(static_cast<std::int64_t>(monomials[i].degree) * dt);
    rules.push_back({tw * w_letter(i), Element::monomial(f, ext, w_letter(i) * tw, f.neg(s))});
  }
  // x w_m -> -s_m w_x m + [x m, t]
  for (Letter x : xs) {
    Word xw = Word::single(*ext, X(x));
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      Scalar s = f.sign(static_cast<std::int64_t>(monomials[i].degree) * dt);
      Element rhs = Element::monomial(f, ext, w_letter(single_x(x)) * monomial_word(monomials[i]), f.neg(s));
      Element product = normal_form(base_only, Element::monomial(f, ext, xw * monomial_word(monomials[i])));
      for (const auto& [w, c] : product.terms()) {
        auto j = monomial_index(w);
        if (!j) {
          throw OrientationError("rotation letters do not span an exterior algebra: " +
                                 format_word(*ext, xw * monomial_word(monomials[i])) + " reduces to " +
                                 to_string(product));
        }
        rhs.add_term(w_letter(*j), c);
      }
      rules.push_back({xw * w_letter(i), std::move(rhs)});
    }
  }
  // y w_m -> sigma w_m y for central y
  for (const auto& c : p.central()) {
    Letter y = base.letter(c);
    Word yw = Word::single(*ext, X(y));
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      Scalar sigma = commutation_sign(p.sign_policy(), f, base.degree(y), dt);
      for (Letter x : monomials[i].letters) {
        sigma = f.mul(sigma, commutation_sign(p.sign_policy(), f, base.degree(y), base.degree(x)));
      }
      rules.push_back({yw * w_letter(i), Element::monomial(f, ext, w_letter(i) * yw, sigma)});
    }
  }

  std::map<Word, std::size_t> seen;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (!seen.emplace(rules[i].lhs, i).second) {
      throw OrientationError("two rules share the left side " + format_word(*ext, rules[i].lhs));
    }
  }
  return RewriteSystem(p, ext, std::move(rules), std::move(embedding));
}

}  // namespace

RewriteSystem compile(const Presentation& p) {
  if (p.family()) return compile_family(p);
  return compile_generic(p);
}

// ---------------------------------------------------------------------------
// normal forms

Element normal_form(const RewriteSystem& rs, const Element& e, NormalFormStats* stats) {
  Element input = rs.lift(e);
  const Field& f = rs.field();
  std::map<Word, Scalar> pending(input.terms().begin(), input.terms().end());
  Element out(f, rs.table());
  std::size_t steps = 0;
  // Rewriting only produces smaller words, so taking the largest pending word
  // first means each word is rewritten once, with all contributions merged.
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    auto redex = rs.find_redex(w);
    if (!redex) {
      out.add_term(w, c);
      continue;
    }
    ++steps;
    const RewriteRule& rule = rs.rules()[redex->rule];
    for (const auto& [u, d] : rule.rhs.terms()) {
      Word next = w.splice(redex->position, rule.lhs.size(), rule.lhs.degree(), u);
      Scalar add = f.mul(c, d);
      auto [it, inserted] = pending.try_emplace(std::move(next), add);
      if (!inserted) {
        it->second = f.add(it->second, add);
        if (f.is_zero(it->second)) pending.erase(it);
      }
    }
  }
  if (stats) stats->steps = steps;
  return out;
}

Element reduced_product(const RewriteSystem& rs, const Element& a, const Element& b) {
  return normal_form(rs, mul(rs.lift(a), rs.lift(b)));
}

std::uint64_t word_count(const GeneratorTable& table, int d) {
  if (d < 0) return 0;
  std::vector<std::uint64_t> n(static_cast<std::size_t>(d) + 1, 0);
  n[0] = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  for (int e = 1; e <= d; ++e) {
    std::uint64_t total = 0;
    for (const auto& g : table.generators()) {
      if (g.degree > e) continue;
      std::uint64_t add = n[static_cast<std::size_t>(e - g.degree)];
      total = (cap - total < add) ? cap : total + add;
    }
    n[static_cast<std::size_t>(e)] = total;
  }
  return n[static_cast<std::size_t>(d)];
}

std::vector<Word> basis_words(const RewriteSystem& rs, int d) {
  std::vector<Word> out;
  if (d < 0) return out;
  const GeneratorTable& table = *rs.table();
  std::vector<Letter> current;
  // Irreducible words are closed under prefixes, so it is enough to check the
  // newest suffix at every extension.
  auto extend = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(table, current);
      return;
    }
    for (std::size_t l = 0; l < table.size(); ++l) {
      int dl = table.degree(static_cast<Letter>(l));
      if (dl > remaining) continue;
      current.push_back(static_cast<Letter>(l));
      Word probe(table, current);
      if (!rs.has_suffix_redex(probe)) self(self, remaining - dl);
      current.pop_back();
    }
  };
  extend(extend, d);
  return out;
}

// ---------------------------------------------------------------------------
// consistency

namespace {

class WordSampler {
 public:
  WordSampler(const GeneratorTable& table, int dmax) : table_(table) {
    for (int d = 0; d <= dmax; ++d) counts_.push_back(word_count(table, d));
  }
  bool has(int d) const { return d >= 0 && d < static_cast<int>(counts_.size()) && counts_[d] > 0; }

  Word sample(int d, std::mt19937_64& rng) const {
    std::vector<Letter> letters;
    while (d > 0) {
      std::uint64_t r = rng() % counts_[static_cast<std::size_t>(d)];
      for (std::size_t l = 0; l < table_.size(); ++l) {
        int dl = table_.degree(static_cast<Letter>(l));
        if (dl > d) continue;
        std::uint64_t c = counts_[static_cast<std::size_t>(d - dl)];
        if (r < c) {
          letters.push_back(static_cast<Letter>(l));
          d -= dl;
          break;
        }
        r -= c;
      }
    }
    return Word(table_, letters);
  }

 private:
  const GeneratorTable& table_;
  std::vector<std::uint64_t> counts_;
};

Element random_homogeneous(const Field& f, const TablePtr& table, const WordSampler& sampler, int d,
                           std::mt19937_64& rng) {
  Element e(f, table);
  const int terms = 1 + static_cast<int>(rng() % 3);
  const std::uint64_t p = f.is_rational() ? 7 : f.characteristic();
  for (int i = 0; i < terms; ++i) {
    auto c = static_cast<std::int64_t>(1 + rng() % (p - 1));
    if (f.is_rational() && (rng() & 1U)) c = -c;
    e.add_term(sampler.sample(d, rng), f.from_int(c));
  }
  return e;
}

}  // namespace

Report check_consistency(const RewriteSystem& rs, int dmax, std::size_t samples, std::uint64_t seed) {
  Report report("rewrite consistency");
  const Field& f = rs.field();
  const Presentation& base = rs.base();
  std::mt19937_64 rng(seed);
  WordSampler sampler(*base.table(), dmax);

  for (const auto& r : base.expanded_relations()) {
    const int e = degree(r).value;
    if (e > dmax) continue;
    std::size_t done = 0;
    std::string failure;
    for (std::size_t s = 0; s < samples && failure.empty(); ++s) {
      const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(dmax - e + 1));
      const int da = static_cast<int>(rng() % static_cast<std::uint64_t>(extra + 1));
      const int db = extra - da;
      if (!sampler.has(da) || !sampler.has(db)) continue;
      Element a = random_homogeneous(f, base.table(), sampler, da, rng);
      Element b = random_homogeneous(f, base.table(), sampler, db, rng);
      Element nf = normal_form(rs, a * r * b);
      ++done;
      if (!nf.is_zero()) failure = "(" + to_string(a) + ")*(" + to_string(r) + ")*(" + to_string(b) + ") -> " + to_string(nf);
    }
    if (failure.empty()) {
      report.add("relation multiple", e, to_string(r) + " [" + std::to_string(done) + " samples]", true);
    } else {
      report.add("relation multiple", e, failure, false);
    }
  }

  const auto& rules = rs.rules();
  const GeneratorTable& table = *rs.table();
  std::map<int, std::size_t> resolved;
  auto nf_of = [&](const Element& e) { return normal_form(rs, e); };
  auto record = [&](const Word& overlap, const Element& a, const Element& b) {
    Element x = nf_of(a), y = nf_of(b);
    if (x == y) {
      resolved[overlap.degree()]++;
    } else {
      report.add("overlap", overlap.degree(),
                 format_word(table, overlap) + ": " + to_string(x) + " vs " + to_string(y), false);
    }
  };
  auto word_part = [&](const Word& w, std::size_t from, std::size_t to) {
    return Word(table, std::span<const Letter>(w.letters().data() + from, to - from));
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      // suffix of li == prefix of lj
      for (std::size_t k = 1; k < li.size() && k < lj.size(); ++k) {
        if (!std::equal(li.letters().end() - static_cast<std::ptrdiff_t>(k), li.letters().end(), lj.letters().begin())) {
          continue;
        }
        Word tail = word_part(lj, k, lj.size());
        Word head = word_part(li, 0, li.size() - k);
        Word overlap = li * tail;
        if (overlap.degree() > dmax) continue;
        Element path1 = rules[i].rhs * Element::monomial(f, rs.table(), tail);
        Element path2 = Element::monomial(f, rs.table(), head) * rules[j].rhs;
        record(overlap, path1, path2);
      }
      // lj strictly inside li
      if (i != j && lj.size() < li.size() && li.degree() <= dmax) {
        for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
          if (!li.matches_at(pos, lj)) continue;
          Element path2 = Element::monomial(f, rs.table(), word_part(li, 0, pos)) * rules[j].rhs *
                          Element::monomial(f, rs.table(), word_part(li, pos + lj.size(), li.size()));
          record(li, rules[i].rhs, path2);
        }
      }
    }
  }
  for (const auto& [d, n] : resolved) report.add("overlap", d, std::to_string(n) + " overlaps resolve", true);
  return report;
}

}  // namespace pontryagin
