#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pontryagin/report.hpp"
#include "pontryagin/rewrite.hpp"

namespace pontryagin {

/// Element of an N-fold tensor power of a graded algebra, all factors over
/// one generator table.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<Word, N>;
  using Terms = std::map<Key, Scalar>;

  Tensor(Field field, TablePtr table) : field_(std::move(field)), table_(std::move(table)) {}

  const Field& field() const { return field_; }
  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Scalar& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  bool operator==(const Tensor& other) const { return field_ == other.field_ && terms_ == other.terms_; }

 private:
  Field field_;
  TablePtr table_;
  Terms terms_;
};

using TensorElement = Tensor<2>;

/// "w1 ⊗ x1 + x1 ⊗ w1", "0" for zero.
template <std::size_t N>
std::string to_string(const Tensor<N>& t);

/// Component-wise product with the Koszul sign (-1)^{sum_{i>j} |a_i||b_j|};
/// each factor is reduced to normal form.
template <std::size_t N>
Tensor<N> multiply(const RewriteSystem& rs, const Tensor<N>& a, const Tensor<N>& b);

/// a ⊗ b for two elements.
TensorElement tensor(const Element& a, const Element& b);

/// A coproduct on the algebra presented by a rewrite system, given on base
/// generators and extended multiplicatively.  Derived letters get the
/// coproduct of what they stand for.
class HopfStructure {
 public:
  /// `delta` lists Δ(g) for every base generator, in table order, with both
  /// factors over the extended table.  Throws PresentationError if some Δ(g)
  /// lacks g⊗1 + 1⊗g, has the wrong degree, or does not kill a relation.
  HopfStructure(RewriteSystem rs, std::vector<TensorElement> delta);

  /// The usual choice: over F2 a degree-2 generator g2 with a degree-1
  /// partner g1 gets Δ(g2) = g2⊗1 + g1⊗g1 + 1⊗g2, every other generator is
  /// primitive.
  static HopfStructure standard(RewriteSystem rs);

  const RewriteSystem& rewrite_system() const { return rs_; }
  const Field& field() const { return rs_.field(); }
  /// Δ of a letter of the extended table.
  const TensorElement& delta(Letter l) const { return letter_delta_[l]; }
  const std::vector<TensorElement>& deltas() const { return letter_delta_; }

 private:
  RewriteSystem rs_;
  std::vector<TensorElement> letter_delta_;
};

/// Δ of a homogeneous element (base or extended table).  Throws HomogeneityError.
TensorElement coproduct(const HopfStructure& h, const Element& e);

/// Linear form on one degree of the algebra, in coordinates against the
/// dual of the normal-form basis of that degree.
struct DualElement {
  int degree = 0;
  std::map<Word, Scalar> coords;

  bool is_zero() const { return coords.empty(); }
  bool operator==(const DualElement&) const = default;
};

/// "dual(w1) + 2*dual(x1*y2)".  Each word must be a normal-form basis word
/// over the extended table; all words must share a degree.  Throws ParseError.
DualElement parse_dual(std::string_view text, const RewriteSystem& rs);
std::string to_string(const DualElement& a, const RewriteSystem& rs);
DualElement dual_of(const RewriteSystem& rs, const Word& basis_word);

/// <a, e>: coordinates of a against the normal form of e.  Throws
/// HomogeneityError on a degree mismatch.
Scalar pair(const DualElement& a, const Element& e, const RewriteSystem& rs);

/// <a ∪ b, c> = sum over Δc = Σ u⊗v of (-1)^{|b||u|} a(u) b(v).
DualElement cup(const DualElement& a, const DualElement& b, const HopfStructure& h);

/// Least k with a^k = 0 under cup, or nullopt if a^k != 0 for all k <= bound.
std::optional<int> nilpotency_order(const DualElement& a, const HopfStructure& h, int bound);

/// Δ kills relations and rules; coassociativity and counit on basis words of
/// degree <= dmax; cocommutativity reported as information.
Report check_coproduct(const HopfStructure& h, int dmax);

/// Image of a tensor under a Künneth map into a tensor product presentation:
/// u⊗v goes to f(u)*g(v), where f and g rename letters by name (a letter
/// missing from a map keeps its name).  The result is in normal form for `target`.
Element kunneth_image(const TensorElement& t, const RewriteSystem& target,
                      const std::map<std::string, std::string>& left_names,
                      const std::map<std::string, std::string>& right_names);

}  // namespace pontryagin
