#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pontryagin/presentation.hpp"
#include "pontryagin/report.hpp"

namespace pontryagin {

/// lhs -> rhs.  Every word of rhs is strictly smaller than lhs in the
/// (degree, precedence-lex) order and has the same degree.
struct RewriteRule {
  Word lhs;
  Element rhs;
};

/// Oriented rewriting system over an extended alphabet: derived letters
/// (the commutators w_i) come first, followed by the base generators.
class RewriteSystem {
 public:
  RewriteSystem(Presentation base, TablePtr extended, std::vector<RewriteRule> rules, std::vector<Element> embedding);

  const Presentation& base() const { return base_; }
  const Field& field() const { return base_.field(); }
  const TablePtr& table() const { return extended_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t derived_letters() const { return extended_->size() - base_.table()->size(); }

  /// The base-table element a letter of the extended table stands for.
  const Element& embedding(Letter l) const { return embedding_[l]; }
  /// Expand derived letters: extended element -> base element.
  Element embed(const Element& e) const;
  /// Base element -> same element written in the extended table.  Elements
  /// already over the extended table pass through.  Throws IncompatibleContext.
  Element lift(const Element& e) const;

  /// Leftmost redex, first matching rule in registry order.
  struct Redex {
    std::size_t position;
    std::size_t rule;
  };
  std::optional<Redex> find_redex(const Word& w) const;
  /// True if some rule lhs is a suffix of w.
  bool has_suffix_redex(const Word& w) const;

 private:
  Presentation base_;
  TablePtr extended_;
  std::vector<RewriteRule> rules_;
  std::vector<Element> embedding_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::vector<std::vector<std::size_t>> by_last_;
};

/// Orient a presentation.  Presentations carrying a CommutatorFamily get the
/// derived commutator letters and their rules; others are oriented relation
/// by relation at the leading word.  Throws OrientationError when two
/// relations share a leading word.
RewriteSystem compile(const Presentation& p);

struct NormalFormStats {
  std::size_t steps = 0;
};

/// Exhaustive rewriting with the deterministic strategy.  Input may be over
/// the base or the extended table; output is over the extended table.
Element normal_form(const RewriteSystem& rs, const Element& e, NormalFormStats* stats = nullptr);

/// Rule-irreducible words of degree d, in canonical order.
std::vector<Word> basis_words(const RewriteSystem& rs, int d);

/// Number of words of degree d over the extended alphabet (saturating).
std::uint64_t word_count(const GeneratorTable& table, int d);

/// (a) normal_form(a*r*b) = 0 for relations r and random homogeneous a, b;
/// (b) every overlap and inclusion of two rule left sides resolves.
Report check_consistency(const RewriteSystem& rs, int dmax, std::size_t samples, std::uint64_t seed);

/// Product of two basis words (or any elements), then normal form.
Element reduced_product(const RewriteSystem& rs, const Element& a, const Element& b);

}  // namespace pontryagin
