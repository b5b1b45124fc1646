#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pontryagin {

/// Index of a generator in its table; the index is also its precedence.
using Letter = std::uint8_t;

struct Generator {
  std::string name;
  int degree = 1;

  bool operator==(const Generator&) const = default;
};

/// Ordered list of named, positively graded generators.  The list order is
/// the letter precedence used by the monomial order.
class GeneratorTable {
 public:
  /// Throws PresentationError on duplicate or malformed names, degree < 1,
  /// or more than 255 generators.
  explicit GeneratorTable(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](Letter l) const { return generators_[l]; }
  const std::vector<Generator>& generators() const { return generators_; }
  int degree(Letter l) const { return generators_[l].degree; }
  const std::string& name(Letter l) const { return generators_[l].name; }

  std::optional<Letter> find(std::string_view name) const;
  /// Throws ParseError for an unknown name.
  Letter letter(std::string_view name) const;

  bool operator==(const GeneratorTable& other) const { return generators_ == other.generators_; }

 private:
  std::vector<Generator> generators_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

TablePtr make_table(std::vector<Generator> generators);

/// Pointer equality or structural equality.
bool same_table(const TablePtr& a, const TablePtr& b);

bool is_identifier(std::string_view name);

/// A monomial in the free algebra.  Carries its degree so that the canonical
/// order (degree, then lexicographic by precedence) needs no table lookup.
class Word {
 public:
  Word() = default;
  Word(const GeneratorTable& table, std::vector<Letter> letters);
  Word(const GeneratorTable& table, std::span<const Letter> letters);
  static Word single(const GeneratorTable& table, Letter l) { return Word(table, std::vector<Letter>{l}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int degree() const { return degree_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word operator*(const Word& other) const;

  /// Replace `length` letters starting at `pos`, whose total degree is
  /// `removed_degree`, by `inserted`.
  Word splice(std::size_t pos, std::size_t length, int removed_degree, const Word& inserted) const;

  /// True if `pattern` occurs at position `pos`.
  bool matches_at(std::size_t pos, const Word& pattern) const;

  std::strong_ordering operator<=>(const Word& other) const {
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    return letters_ <=> other.letters_;
  }
  bool operator==(const Word& other) const = default;

 private:
  std::vector<Letter> letters_;
  int degree_ = 0;
};

/// "x1*t", or "1" for the empty word.
std::string format_word(const GeneratorTable& table, const Word& w);

}  // namespace pontryagin
