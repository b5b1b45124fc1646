#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pontryagin/element.hpp"

namespace pontryagin {

/// How commutation relations g*c = sigma * c*g pick sigma: always +1, or
/// the Koszul sign (-1)^{|g||c|}.
enum class SignPolicy { Strict, Koszul };

std::string to_string(SignPolicy policy);
SignPolicy parse_sign_policy(std::string_view text);

/// sigma for two letters of the given degrees.
Scalar commutation_sign(SignPolicy policy, const Field& field, int deg_a, int deg_b);

/// Marks presentations of the shape  Lambda(central) (x) F<circle, rotations>/R
/// where the circle letter squares to zero and the rotation letters span an
/// exterior algebra.  The rewrite compiler adds one derived letter for each
/// commutator [m, circle] with m a nonzero rotation monomial.
struct CommutatorFamily {
  std::string circle;
  std::vector<std::string> rotations;
};

/// Generators, homogeneous relations and a set of central generators.
class Presentation {
 public:
  /// Validates relations (nonzero, homogeneous, same field and table) and
  /// central names; throws PresentationError otherwise.
  Presentation(Field field, TablePtr table, std::vector<Element> relations, std::vector<std::string> central = {},
               SignPolicy policy = SignPolicy::Strict);

  const Field& field() const { return field_; }
  const TablePtr& table() const { return table_; }
  const std::vector<Element>& relations() const { return relations_; }
  const std::vector<std::string>& central() const { return central_; }
  SignPolicy sign_policy() const { return policy_; }

  /// Declared relations followed by the commutation relations g*c - sigma*c*g
  /// implied by centrality (one per unordered pair).
  const std::vector<Element>& expanded_relations() const { return expanded_; }

  const std::optional<CommutatorFamily>& family() const { return family_; }
  Presentation with_family(CommutatorFamily family) const;

  const std::vector<std::string>& warnings() const { return warnings_; }
  Presentation with_warning(std::string warning) const;

  Element parse(std::string_view text) const { return parse_element(text, field_, table_); }
  Element generator(std::string_view name) const { return Element::generator(field_, table_, name); }

 private:
  Field field_;
  TablePtr table_;
  std::vector<Element> relations_;
  std::vector<std::string> central_;
  SignPolicy policy_;
  std::vector<Element> expanded_;
  std::optional<CommutatorFamily> family_;
  std::vector<std::string> warnings_;
};

Presentation exterior_algebra(const std::vector<Generator>& gens, const Field& field,
                              SignPolicy policy = SignPolicy::Strict);
/// One generator g with g^order = 0.  Throws PresentationError for order < 2;
/// records a warning when the order is not a power of the characteristic.
Presentation truncated_polynomial(const std::string& name, int degree, int order, const Field& field);
/// Generators of p, then of q; relations of both plus cross commutation under
/// p's sign policy.  Throws IncompatibleContext / PresentationError.
Presentation tensor_product(const Presentation& p, const Presentation& q);
Presentation free_algebra(const std::vector<Generator>& gens, const Field& field);

/// Additive basis described by words: a free prefix in `free_letters`,
/// followed by an increasing subset of `exterior_tail`.  `reduced` drops the
/// empty label; `shift` > 0 smashes with a sphere of that dimension.
struct BasisSchema {
  std::string name;
  std::vector<Generator> free_letters;
  std::vector<Generator> exterior_tail;
  bool reduced = false;
  int shift = 0;

  /// Basis labels of the given degree in canonical order.
  std::vector<std::string> labels(int degree) const;
};

using PresetValue = std::variant<Presentation, BasisSchema>;

const std::vector<std::string>& preset_names();
std::string preset_description(std::string_view name);
/// Throws PresentationError for an unknown preset name.
PresetValue preset(std::string_view name, const Field& field, SignPolicy policy = SignPolicy::Strict);
/// As preset(), but throws PresentationError if the preset is a basis schema.
Presentation preset_presentation(std::string_view name, const Field& field, SignPolicy policy = SignPolicy::Strict);

/// JSON schema:
///   {"field":"F2", "generators":[{"name":"t","degree":1},...],
///    "relations":["t*t", ...], "central":["y1"], "sign_policy":"strict"|"koszul",
///    "family":{"circle":"t","rotations":["x1","x2"]}}   (family optional)
Presentation parse_presentation_json(std::string_view text);
std::string presentation_to_json(const Presentation& p);

}  // namespace pontryagin
