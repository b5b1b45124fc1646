#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pontryagin/presentation.hpp"
#include "pontryagin/report.hpp"
#include "pontryagin/rewrite.hpp"

namespace pontryagin {

/// Which column an echelon row is pivoted on: its largest word or its
/// smallest.  Both give the same rank; the choice exists so the two can be
/// compared.
enum class PivotOrder { Leading, Trailing };

/// How the degree-d slice of the ideal is spanned.
///  Recursive:    r*b for relations r and words b, plus g*v for generators g
///                and echelon rows v of the slice of degree d - |g|.
///  AllMultiples: a*r*b for all words a, b.  Only sensible on small inputs.
enum class Spanning { Recursive, AllMultiples };

struct OracleOptions {
  std::uint64_t max_words = 500000;
  PivotOrder pivot = PivotOrder::Leading;
  Spanning spanning = Spanning::Recursive;
};

namespace detail {
class SliceEngine;
}

/// Degree slices of the two-sided ideal generated by the relations of a
/// presentation, computed by exact elimination over its field.  Slices are
/// built on demand and cached.
class Oracle {
 public:
  explicit Oracle(const Presentation& p, OracleOptions options = {});
  ~Oracle();
  Oracle(Oracle&&) noexcept;
  Oracle& operator=(Oracle&&) noexcept;

  const Presentation& presentation() const { return presentation_; }

  /// Number of degree-d words minus the rank of the ideal slice.  Throws
  /// ResourceLimit when a slice has more than max_words words.
  std::uint64_t quotient_dimension(int d);
  std::uint64_t ideal_rank(int d);

  /// Membership of a homogeneous base-table element.  Throws HomogeneityError
  /// and ResourceLimit.
  bool contains(const Element& e);

  /// True if the elements (all of degree d) stay linearly independent modulo
  /// the ideal.
  bool independent_modulo(const std::vector<Element>& elements, int d);

 private:
  Presentation presentation_;
  OracleOptions options_;
  std::unique_ptr<detail::SliceEngine> engine_;
};

std::uint64_t quotient_dimension(const Presentation& p, int d, OracleOptions options = {});
std::vector<std::uint64_t> quotient_dimensions(const Presentation& p, int dmax, OracleOptions options = {});
bool ideal_contains(const Presentation& p, const Element& e, OracleOptions options = {});

/// Per degree: basis word count equals the quotient dimension, and the
/// embedded basis words are independent modulo the ideal.
Report verify_basis(const Presentation& p, const RewriteSystem& rs, int dmax, OracleOptions options = {});

/// Every rule lhs - rhs, embedded into the base algebra, lies in the ideal.
Report verify_rules(const RewriteSystem& rs, OracleOptions options = {});

}  // namespace pontryagin
