#include "pontryagin/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "pontryagin/errors.hpp"

namespace pontryagin {

namespace {

struct ModArith {
  using Value = std::uint64_t;
  std::uint64_t p;

  Value from(const Field& f, const Scalar& s) const { return f.residue(s); }
  bool is_zero(const Value& a) const { return a == 0; }
  Value mul(const Value& a, const Value& b) const {
    return static_cast<Value>(static_cast<unsigned __int128>(a) * b % p);
  }
  Value sub(const Value& a, const Value& b) const { return a >= b ? a - b : a + (p - b); }
  Value inv(const Value& a) const {
    // Fermat; p is prime.
    Value result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

struct RatArith {
  using Value = Rational;

  Value from(const Field& f, const Scalar& s) const { return f.rational(s); }
  bool is_zero(const Value& a) const { return sgn(a) == 0; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value inv(const Value& a) const { return 1 / a; }
};

using Column = std::uint32_t;

}  // namespace

namespace detail {

/// Coordinates of a homogeneous element: (column, coefficient) pairs.
using Coordinates = std::vector<std::pair<Column, Scalar>>;

class SliceEngine {
 public:
  virtual ~SliceEngine() = default;
  virtual std::uint64_t word_count(int d) = 0;
  virtual std::uint64_t rank(int d) = 0;
  virtual Column column_of(const Word& w) = 0;
  virtual bool reduces_to_zero(const Coordinates& v, int d) = 0;
  virtual bool independent(const std::vector<Coordinates>& vs, int d) = 0;
};

}  // namespace detail

namespace {

template <class A>
class Engine final : public detail::SliceEngine {
  using V = typename A::Value;
  struct Entry {
    Column col;
    V val;
  };
  using Row = std::vector<Entry>;

  struct Echelon {
    std::vector<Row> rows;
    std::map<Column, std::size_t> pivot_of;
  };

 public:
  Engine(const Presentation& p, A arith, OracleOptions options)
      : p_(p), table_(*p.table()), arith_(std::move(arith)), options_(options) {
    for (const auto& r : p.expanded_relations()) relation_degrees_.push_back(degree(r).value);
  }

  std::uint64_t word_count(int d) override {
    ensure_counts(d);
    return counts_[static_cast<std::size_t>(d)];
  }

  std::uint64_t rank(int d) override { return slice(d).rows.size(); }

  Column column_of(const Word& w) override {
    ensure_counts(w.degree());
    std::uint64_t col = 0;
    int rem = w.degree();
    for (Letter l : w.letters()) {
      col += offset(rem, l);
      rem -= table_.degree(l);
    }
    return static_cast<Column>(col);
  }

  bool reduces_to_zero(const detail::Coordinates& v, int d) override {
    const Echelon& e = slice(d);
    Row row = to_row(v);
    reduce(row, {&e});
    return row.empty();
  }

  bool independent(const std::vector<detail::Coordinates>& vs, int d) override {
    const Echelon& e = slice(d);
    Echelon extra;
    for (const auto& v : vs) {
      Row row = to_row(v);
      reduce(row, {&e, &extra});
      if (row.empty()) return false;
      add_pivot(extra, std::move(row));
    }
    return true;
  }

 private:
  void ensure_counts(int d) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    if (counts_.empty()) counts_.push_back(1);
    while (static_cast<int>(counts_.size()) <= d) {
      const int e = static_cast<int>(counts_.size());
      std::uint64_t total = 0;
      for (const auto& g : table_.generators()) {
        if (g.degree > e) continue;
        std::uint64_t add = counts_[static_cast<std::size_t>(e - g.degree)];
        total = cap - total < add ? cap : total + add;
      }
      counts_.push_back(total);
    }
  }

  // Number of degree-rem words whose first letter precedes l.
  std::uint64_t offset(int rem, Letter l) {
    std::uint64_t off = 0;
    for (Letter k = 0; k < l; ++k) {
      int dk = table_.degree(k);
      if (dk <= rem) off += counts_[static_cast<std::size_t>(rem - dk)];
    }
    return off;
  }

  Row to_row(const detail::Coordinates& v) const {
    Row row;
    for (const auto& [c, s] : v) {
      V x = arith_.from(p_.field(), s);
      if (!arith_.is_zero(x)) row.push_back({c, std::move(x)});
    }
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    return row;
  }

  const Entry& lead(const Row& r) const { return options_.pivot == PivotOrder::Leading ? r.back() : r.front(); }

  // row -= factor * pivot, both sorted by column.
  Row axpy(const Row& row, const V& factor, const Row& pivot) const {
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].col < row[i].col) {
        V neg = arith_.sub(V(0), arith_.mul(factor, pivot[j].val));
        out.push_back({pivot[j].col, std::move(neg)});
        ++j;
      } else {
        V x = arith_.sub(row[i].val, arith_.mul(factor, pivot[j].val));
        if (!arith_.is_zero(x)) out.push_back({row[i].col, std::move(x)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void reduce(Row& row, std::initializer_list<const Echelon*> echelons) const {
    while (!row.empty()) {
      const Entry& l = lead(row);
      const Row* pivot = nullptr;
      for (const Echelon* e : echelons) {
        if (auto it = e->pivot_of.find(l.col); it != e->pivot_of.end()) {
          pivot = &e->rows[it->second];
          break;
        }
      }
      if (!pivot) return;
      V factor = l.val;
      row = axpy(row, factor, *pivot);
    }
  }

  void add_pivot(Echelon& e, Row row) const {
    V inv = arith_.inv(lead(row).val);
    for (auto& entry : row) entry.val = arith_.mul(entry.val, inv);
    e.pivot_of.emplace(lead(row).col, e.rows.size());
    e.rows.push_back(std::move(row));
  }

  void insert(Echelon& e, Row row) const {
    reduce(row, {&e});
    if (!row.empty()) add_pivot(e, std::move(row));
  }

  const Echelon& slice(int d) {
    if (auto it = slices_.find(d); it != slices_.end()) return it->second;
    ensure_counts(d);
    const std::uint64_t n = counts_[static_cast<std::size_t>(d)];
    if (n > options_.max_words) {
      throw ResourceLimit("degree " + std::to_string(d) + " has " + std::to_string(n) +
                          " words, above the cap of " + std::to_string(options_.max_words) + " (--max-words)");
    }
    Echelon e;
    if (options_.spanning == Spanning::Recursive) {
      for (Letter g = 0; g < table_.size(); ++g) {
        const int dg = table_.degree(g);
        if (dg > d) continue;
        const Echelon& lower = slice(d - dg);
        const std::uint64_t off = offset(d, g);
        for (const Row& r : lower.rows) {
          Row shifted = r;
          for (auto& entry : shifted) entry.col = static_cast<Column>(entry.col + off);
          insert(e, std::move(shifted));
        }
      }
      for_each_relation_multiple(d, false, [&](Row row) { insert(e, std::move(row)); });
    } else {
      for_each_relation_multiple(d, true, [&](Row row) { insert(e, std::move(row)); });
    }
    return slices_.emplace(d, std::move(e)).first->second;
  }

  Word decode(int d, std::uint64_t rank) {
    std::vector<Letter> letters;
    while (d > 0) {
      for (Letter l = 0; l < table_.size(); ++l) {
        int dl = table_.degree(l);
        if (dl > d) continue;
        std::uint64_t c = counts_[static_cast<std::size_t>(d - dl)];
        if (rank < c) {
          letters.push_back(l);
          d -= dl;
          break;
        }
        rank -= c;
      }
    }
    return Word(table_, letters);
  }

  // Rows r*b (or a*r*b when two_sided) of degree d.
  template <class F>
  void for_each_relation_multiple(int d, bool two_sided, F&& emit) {
    const auto& rels = p_.expanded_relations();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const int e = relation_degrees_[i];
      if (e > d) continue;
      std::vector<std::pair<Word, V>> terms;
      for (const auto& [w, c] : rels[i].terms()) terms.emplace_back(w, arith_.from(p_.field(), c));
      for (int da = 0; da <= (two_sided ? d - e : 0); ++da) {
        const int db = d - e - da;
        for (std::uint64_t a = 0; a < counts_[static_cast<std::size_t>(da)]; ++a) {
          Word prefix = decode(da, a);
          std::vector<std::pair<std::uint64_t, V>> heads;
          for (const auto& [u, c] : terms) {
            Word au = prefix * u;
            std::uint64_t col = 0;
            int rem = d;
            for (Letter l : au.letters()) {
              col += offset(rem, l);
              rem -= table_.degree(l);
            }
            heads.emplace_back(col, c);
          }
          for (std::uint64_t b = 0; b < counts_[static_cast<std::size_t>(db)]; ++b) {
            Row row;
            row.reserve(heads.size());
            for (const auto& [col, c] : heads) row.push_back({static_cast<Column>(col + b), c});
            std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
            emit(std::move(row));
          }
        }
      }
    }
  }

  Presentation p_;
  const GeneratorTable& table_;
  A arith_;
  OracleOptions options_;
  std::vector<int> relation_degrees_;
  std::vector<std::uint64_t> counts_;
  std::map<int, Echelon> slices_;
};

std::unique_ptr<detail::SliceEngine> make_engine(const Presentation& p, OracleOptions options) {
  if (p.field().is_rational()) return std::make_unique<Engine<RatArith>>(p, RatArith{}, options);
  return std::make_unique<Engine<ModArith>>(p, ModArith{p.field().characteristic()}, options);
}

}  // namespace

Oracle::Oracle(const Presentation& p, OracleOptions options)
    : presentation_(p), options_(options), engine_(make_engine(presentation_, options)) {}
Oracle::~Oracle() = default;
Oracle::Oracle(Oracle&&) noexcept = default;
Oracle& Oracle::operator=(Oracle&&) noexcept = default;

std::uint64_t Oracle::ideal_rank(int d) {
  if (d < 0) return 0;
  return engine_->rank(d);
}

std::uint64_t Oracle::quotient_dimension(int d) {
  if (d < 0) return 0;
  const std::uint64_t r = engine_->rank(d);
  return engine_->word_count(d) - r;
}

namespace {

detail::Coordinates coordinates(detail::SliceEngine& engine, const Element& e) {
  detail::Coordinates v;
  for (const auto& [w, c] : e.terms()) v.emplace_back(engine.column_of(w), c);
  return v;
}

void require_base(const Presentation& p, const Element& e) {
  if (!(e.field() == p.field())) throw IncompatibleContext("field mismatch: " + e.field().name() + " vs " + p.field().name());
  if (!same_table(e.table(), p.table())) throw IncompatibleContext("element is not over the presentation's generators");
}

}  // namespace

bool Oracle::contains(const Element& e) {
  require_base(presentation_, e);
  Degree deg = degree(e);
  if (deg.kind == Degree::Kind::Zero) return true;
  if (!deg.is_homogeneous()) throw HomogeneityError("ideal membership needs a homogeneous element: " + to_string(e));
  return engine_->reduces_to_zero(coordinates(*engine_, e), deg.value);
}

bool Oracle::independent_modulo(const std::vector<Element>& elements, int d) {
  std::vector<detail::Coordinates> vs;
  for (const auto& e : elements) {
    require_base(presentation_, e);
    Degree deg = degree(e);
    if (deg.kind == Degree::Kind::Zero) return false;
    if (!deg.is_homogeneous() || deg.value != d) {
      throw HomogeneityError("expected an element of degree " + std::to_string(d) + ": " + to_string(e));
    }
    vs.push_back(coordinates(*engine_, e));
  }
  return engine_->independent(vs, d);
}

std::uint64_t quotient_dimension(const Presentation& p, int d, OracleOptions options) {
  return Oracle(p, options).quotient_dimension(d);
}

std::vector<std::uint64_t> quotient_dimensions(const Presentation& p, int dmax, OracleOptions options) {
  Oracle o(p, options);
  std::vector<std::uint64_t> out;
  for (int d = 0; d <= dmax; ++d) out.push_back(o.quotient_dimension(d));
  return out;
}

bool ideal_contains(const Presentation& p, const Element& e, OracleOptions options) {
  return Oracle(p, options).contains(e);
}

Report verify_basis(const Presentation& p, const RewriteSystem& rs, int dmax, OracleOptions options) {
  Report report("basis against oracle");
  Oracle o(p, options);
  for (int d = 0; d <= dmax; ++d) {
    auto words = basis_words(rs, d);
    const std::uint64_t dim = o.quotient_dimension(d);
    std::vector<Element> embedded;
    for (const auto& w : words) embedded.push_back(rs.embed(Element::monomial(rs.field(), rs.table(), w)));
    const bool counts = words.size() == dim;
    const bool indep = words.empty() || o.independent_modulo(embedded, d);
    report.add("basis count", d, std::to_string(words.size()) + " words, quotient dimension " + std::to_string(dim),
               counts);
    report.add("basis independent", d, std::to_string(words.size()) + " embedded words", indep);
  }
  return report;
}

Report verify_rules(const RewriteSystem& rs, OracleOptions options) {
  Report report("rules against oracle");
  Oracle o(rs.base(), options);
  for (const auto& rule : rs.rules()) {
    Element diff = rs.embed(Element::monomial(rs.field(), rs.table(), rule.lhs) - rule.rhs);
    report.add("rule in ideal", rule.lhs.degree(), format_word(*rs.table(), rule.lhs) + " -> " + to_string(rule.rhs),
               o.contains(diff));
  }
  return report;
}

}  // namespace pontryagin
