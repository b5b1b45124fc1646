#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pontryagin/oracle.hpp"
#include "pontryagin/presentation.hpp"
#include "pontryagin/report.hpp"
#include "pontryagin/rewrite.hpp"

namespace pontryagin {

/// Integer power series c_0 + c_1 q + ... + c_N q^N.  Binary operations
/// truncate to the smaller N; arithmetic overflow throws SeriesError.
class PowerSeries {
 public:
  explicit PowerSeries(int truncation = 0);
  /// Polynomial coefficients (lowest degree first), padded or cut to N.
  PowerSeries(std::vector<std::int64_t> coeffs, int truncation);

  static PowerSeries constant(std::int64_t c, int truncation);
  /// c q^k.
  static PowerSeries monomial(std::int64_t c, int k, int truncation);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](int d) const { return coeffs_[static_cast<std::size_t>(d)]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  PowerSeries truncated(int n) const;

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
/// Exact quotient a / b.  Throws SeriesError naming the first degree at
/// which the constant term of b does not divide what remains.
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

std::string to_string(const PowerSeries& s);

/// numerator / denominator expanded to degree N; the denominator must have
/// constant term ±1.
PowerSeries rational_series(const std::vector<std::int64_t>& numerator, const std::vector<std::int64_t>& denominator,
                            int n);
/// 1 / (1 - v): dimensions of the tensor algebra on a graded space with
/// series v.  Throws SeriesError unless v has zero constant term.
PowerSeries james_series(const PowerSeries& v);

/// Rule-irreducible word counts of degree 0..n.
PowerSeries series_of(const RewriteSystem& rs, int n);
/// Quotient dimensions from exact linear algebra.
PowerSeries oracle_series(const Presentation& p, int n, OracleOptions options = {});
/// Label counts of a basis schema.
PowerSeries series_of(const BasisSchema& schema, int n);

/// Series expressions: integers, q, + - * /, ^ with a nonnegative integer
/// exponent, parentheses, james(expr), algebra(<preset>).  `algebra` calls
/// are resolved by the callback.  Throws ParseError / SeriesError.
using AlgebraResolver = std::function<PowerSeries(const std::string& preset, int n)>;
PowerSeries evaluate_series(std::string_view text, int n, const AlgebraResolver& resolve);

/// The Leray-Hirsch and Mayer-Vietoris consequences for the F2 strata:
/// P_G / P_K0 and P_G / P_K1 are honest series agreeing with the basis
/// schemas of the strata, P_U0 - 1 = q P_U1, and P_U0 grows.
Report check_fibration_identities(int n);

/// series_of(glambda) = james(reduced series of S^1 smash SO(3)) * (1+q) *
/// P_SO(3)^2, and the product model presentation gives the same series.
Report check_homotopy_model(int n, const Field& field);

}  // namespace pontryagin
