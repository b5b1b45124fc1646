#include "pontryagin/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pontryagin/errors.hpp"

namespace pontryagin {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw SeriesError("coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw SeriesError("coefficient overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

}  // namespace

PowerSeries::PowerSeries(int truncation) {
  if (truncation < 0) throw SeriesError("negative truncation");
  coeffs_.assign(static_cast<std::size_t>(truncation) + 1, 0);
}

PowerSeries::PowerSeries(std::vector<std::int64_t> coeffs, int truncation) : PowerSeries(truncation) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = coeffs[i];
}

PowerSeries PowerSeries::constant(std::int64_t c, int truncation) { return PowerSeries({c}, truncation); }

PowerSeries PowerSeries::monomial(std::int64_t c, int k, int truncation) {
  PowerSeries s(truncation);
  if (k >= 0 && k <= truncation) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

PowerSeries PowerSeries::truncated(int n) const {
  if (n > truncation()) throw SeriesError("cannot extend a series truncated at " + std::to_string(truncation()));
  return PowerSeries(std::vector<std::int64_t>(coeffs_.begin(), coeffs_.begin() + n + 1), n);
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.truncation(), b.truncation());
  PowerSeries r(n);
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) c[static_cast<std::size_t>(d)] = checked_add(a[d], b[d]);
  return PowerSeries(std::move(c), n);
}

PowerSeries operator-(const PowerSeries& a) {
  std::vector<std::int64_t> c;
  for (auto x : a.coeffs()) c.push_back(checked_neg(x));
  return PowerSeries(std::move(c), a.truncation());
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.truncation(), b.truncation());
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      c[static_cast<std::size_t>(i + j)] = checked_add(c[static_cast<std::size_t>(i + j)], checked_mul(a[i], b[j]));
    }
  }
  return PowerSeries(std::move(c), n);
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.truncation(), b.truncation());
  if (b[0] == 0) throw SeriesError("division by a series with zero constant term");
  std::vector<std::int64_t> q(static_cast<std::size_t>(n) + 1, 0);
  for (int d = 0; d <= n; ++d) {
    std::int64_t rem = a[d];
    for (int k = 1; k <= d; ++k) rem = checked_add(rem, checked_neg(checked_mul(b[k], q[static_cast<std::size_t>(d - k)])));
    if (rem % b[0] != 0) {
      throw SeriesError("division leaves a remainder at degree " + std::to_string(d) + ": " + std::to_string(rem) +
                        " is not divisible by " + std::to_string(b[0]));
    }
    q[static_cast<std::size_t>(d)] = rem / b[0];
  }
  return PowerSeries(std::move(q), n);
}

std::string to_string(const PowerSeries& s) {
  std::ostringstream out;
  out << '[';
  for (int d = 0; d <= s.truncation(); ++d) out << (d ? "," : "") << s[d];
  out << ']';
  return out.str();
}

PowerSeries rational_series(const std::vector<std::int64_t>& numerator, const std::vector<std::int64_t>& denominator,
                            int n) {
  if (denominator.empty() || (denominator[0] != 1 && denominator[0] != -1)) {
    throw SeriesError("denominator must have constant term 1 or -1");
  }
  return PowerSeries(numerator, n) / PowerSeries(denominator, n);
}

PowerSeries james_series(const PowerSeries& v) {
  if (v[0] != 0) throw SeriesError("james: the series must have zero constant term (reduced homology)");
  return PowerSeries::constant(1, v.truncation()) / (PowerSeries::constant(1, v.truncation()) - v);
}

PowerSeries series_of(const RewriteSystem& rs, int n) {
  std::vector<std::int64_t> c;
  for (int d = 0; d <= n; ++d) c.push_back(static_cast<std::int64_t>(basis_words(rs, d).size()));
  return PowerSeries(std::move(c), n);
}

PowerSeries oracle_series(const Presentation& p, int n, OracleOptions options) {
  std::vector<std::int64_t> c;
  for (auto x : quotient_dimensions(p, n, options)) c.push_back(static_cast<std::int64_t>(x));
  return PowerSeries(std::move(c), n);
}

PowerSeries series_of(const BasisSchema& schema, int n) {
  std::vector<std::int64_t> c;
  for (int d = 0; d <= n; ++d) c.push_back(static_cast<std::int64_t>(schema.labels(d).size()));
  return PowerSeries(std::move(c), n);
}

// ---------------------------------------------------------------------------
// expressions

namespace {

class SeriesParser {
 public:
  SeriesParser(std::string_view text, int n, const AlgebraResolver& resolve) : text_(text), n_(n), resolve_(resolve) {}

  PowerSeries parse() {
    PowerSeries s = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("series expression at position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::int64_t v = 0;
    for (std::size_t i = start; i < pos_; ++i) v = checked_add(checked_mul(v, 10), text_[i] - '0');
    return v;
  }

  PowerSeries expr() {
    PowerSeries s = term();
    while (true) {
      if (accept('+')) {
        s = s + term();
      } else if (accept('-')) {
        s = s - term();
      } else {
        return s;
      }
    }
  }

  PowerSeries term() {
    PowerSeries s = unary();
    while (true) {
      if (accept('*')) {
        s = s * unary();
      } else if (accept('/')) {
        s = s / unary();
      } else {
        return s;
      }
    }
  }

  PowerSeries unary() {
    if (accept('-')) return -unary();
    return power();
  }

  PowerSeries power() {
    PowerSeries base = atom();
    if (!accept('^')) return base;
    std::int64_t e = integer();
    PowerSeries r = PowerSeries::constant(1, n_);
    for (std::int64_t i = 0; i < e; ++i) r = r * base;
    return r;
  }

  PowerSeries atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PowerSeries s = expr();
      expect(')');
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return PowerSeries::constant(integer(), n_);
    std::string name = identifier();
    if (name == "q") return PowerSeries::monomial(1, 1, n_);
    if (name == "james") {
      expect('(');
      PowerSeries s = expr();
      expect(')');
      return james_series(s);
    }
    if (name == "algebra") {
      expect('(');
      std::string preset = identifier();
      if (preset.empty()) fail("expected a preset name");
      expect(')');
      if (!resolve_) fail("algebra(...) is not available here");
      return resolve_(preset, n_);
    }
    if (name.empty()) fail("unexpected '" + std::string(1, c) + "'");
    fail("unknown name '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  const AlgebraResolver& resolve_;
};

}  // namespace

PowerSeries evaluate_series(std::string_view text, int n, const AlgebraResolver& resolve) {
  return SeriesParser(text, n, resolve).parse();
}

// ---------------------------------------------------------------------------
// identities

namespace {

PowerSeries poly(std::vector<std::int64_t> c, int n) { return PowerSeries(std::move(c), n); }

void compare(Report& report, const std::string& check, const PowerSeries& got, const PowerSeries& want) {
  const int n = std::min(got.truncation(), want.truncation());
  for (int d = 0; d <= n; ++d) {
    if (got[d] != want[d]) {
      report.add(check, d, "got " + std::to_string(got[d]) + ", expected " + std::to_string(want[d]), false);
      return;
    }
  }
  report.add(check, n, to_string(got.truncated(n)), true);
}

}  // namespace

Report check_fibration_identities(int n) {
  Report report("fibration identities over F2");
  const Field f2 = Field::prime(2);
  const PowerSeries pg = series_of(compile(preset_presentation("glambda", f2)), n);
  const PowerSeries so3 = poly({1, 1}, n) * poly({1, 0, 1}, n);
  const PowerSeries pk0 = so3 * so3;
  const PowerSeries pk1 = poly({1, 1}, n) * so3;
  compare(report, "K0 series", series_of(compile(preset_presentation("k0", f2)), n), pk0);
  compare(report, "K1 series", series_of(compile(preset_presentation("k1", f2)), n), pk1);

  auto quotient = [&](const std::string& label, const PowerSeries& fiber) -> std::optional<PowerSeries> {
    try {
      PowerSeries u = pg / fiber;
      bool nonneg = std::all_of(u.coeffs().begin(), u.coeffs().end(), [](std::int64_t c) { return c >= 0; });
      report.add("P_G / " + label + " exact", n, "quotient " + to_string(u), (u * fiber == pg) && nonneg);
      return u;
    } catch (const SeriesError& e) {
      report.add("P_G / " + label + " exact", n, e.what(), false);
      return std::nullopt;
    }
  };
  auto u0 = quotient("P_K0", pk0);
  auto u1 = quotient("P_K1", pk1);
  const std::vector<std::int64_t> den = {1, 0, -1, -1, -1};
  if (u0) {
    compare(report, "P_U0 closed form", *u0, rational_series({1, 1}, den, n));
    compare(report, "P_U0 basis schema", *u0, series_of(std::get<BasisSchema>(preset("u0_model", f2)), n));
  }
  if (u1) {
    compare(report, "P_U1 closed form", *u1, rational_series({1, 1, 1, 1}, den, n));
    compare(report, "P_U1 basis schema", *u1, series_of(std::get<BasisSchema>(preset("u1_model", f2)), n));
  }
  if (u0 && u1) {
    compare(report, "P_U0 - 1 = q P_U1", *u0 - PowerSeries::constant(1, n), PowerSeries::monomial(1, 1, n) * *u1);
  }
  if (u0) {
    int bad = -1;
    for (int d = 1; d <= n && bad < 0; ++d) {
      if ((*u0)[d] < (*u0)[d - 1] || (d > 3 && (*u0)[d] < 2)) bad = d;
    }
    report.add("P_U0 nondecreasing, >= 2 beyond degree 3", bad < 0 ? n : bad,
               bad < 0 ? to_string(*u0) : "fails at degree " + std::to_string(bad), bad < 0);
  }
  return report;
}

Report check_homotopy_model(int n, const Field& field) {
  Report report("product model over " + field.name());
  const bool c2 = field.characteristic() == 2;
  const PowerSeries pg = series_of(compile(preset_presentation("glambda", field)), n);
  const PowerSeries smash = series_of(std::get<BasisSchema>(preset("smash_s1_so3", field)), n);
  compare(report, "reduced S1 smash SO3", smash,
          c2 ? poly({0, 0, 1, 1, 1}, n) : PowerSeries::monomial(1, 4, n));
  const PowerSeries so3 = series_of(compile(preset_presentation("so3", field)), n);
  compare(report, "SO3 series", so3, c2 ? poly({1, 1, 1, 1}, n) : poly({1, 0, 0, 1}, n));
  const PowerSeries model = james_series(smash) * poly({1, 1}, n) * so3 * so3;
  compare(report, "glambda = james x S1 x SO3^2", pg, model);
  compare(report, "product model presentation", series_of(compile(preset_presentation("loops_model", field)), n), pg);
  compare(report, "sign policy independence",
          series_of(compile(preset_presentation("glambda", field, SignPolicy::Koszul)), n), pg);
  return report;
}

}  // namespace pontryagin
