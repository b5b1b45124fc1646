#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "pontryagin/field.hpp"
#include "pontryagin/word.hpp"

namespace pontryagin {

/// Degree of an element: the zero element, a homogeneous element of a given
/// degree, or a mix of degrees.
struct Degree {
  enum class Kind { Zero, Homogeneous, Mixed };
  Kind kind = Kind::Zero;
  int value = 0;

  bool is_homogeneous() const { return kind == Kind::Homogeneous; }
  bool operator==(const Degree&) const = default;
};

/// A finite linear combination of words of a graded free algebra.
///
/// Terms are kept in canonical order (degree, then lexicographic by letter
/// precedence) and never carry a zero coefficient.
class Element {
 public:
  using Terms = std::map<Word, Scalar>;

  Element(Field field, TablePtr table);

  static Element monomial(Field field, TablePtr table, Word w, const Scalar& c);
  static Element monomial(Field field, TablePtr table, Word w);
  static Element unit(Field field, TablePtr table);
  /// Throws ParseError for an unknown name.
  static Element generator(Field field, TablePtr table, std::string_view name);

  const Field& field() const { return field_; }
  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Word& w) const;
  /// Accumulates c into the coefficient of w, dropping it if it cancels.
  void add_term(const Word& w, const Scalar& c);

  Element scaled(const Scalar& c) const;

  /// Throws IncompatibleContext unless field and table agree.
  void require_compatible(const Element& other) const;

  bool operator==(const Element& other) const;

 private:
  Field field_;
  TablePtr table_;
  Terms terms_;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
/// Free-algebra product: bilinear extension of concatenation, no reduction.
Element mul(const Element& a, const Element& b);
/// a*b - (-1)^{|a||b|} b*a.  Throws HomogeneityError on mixed input.
Element graded_commutator(const Element& a, const Element& b);
Degree degree(const Element& e);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
Element operator-(const Element& a);

/// Element text syntax: "x1*t + t*x1", "2*t - 1/3*x3*t", "x2^2", "0", "1".
Element parse_element(std::string_view text, const Field& field, const TablePtr& table);
std::string to_string(const Element& e);

/// Re-express e over `target`, sending letter l to letter_map[l].
Element transport(const Element& e, const TablePtr& target, std::span<const Letter> letter_map);

/// Substitute an element for each letter (an algebra map on the free algebra).
Element substitute(const Element& e, std::span<const Element> images, const Field& field, const TablePtr& target);

}  // namespace pontryagin
