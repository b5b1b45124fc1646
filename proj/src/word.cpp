#include "pontryagin/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "pontryagin/errors.hpp"

namespace pontryagin {

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

GeneratorTable::GeneratorTable(std::vector<Generator> generators) : generators_(std::move(generators)) {
  if (generators_.size() > 255) throw PresentationError("at most 255 generators are supported");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!is_identifier(g.name)) throw PresentationError("invalid generator name '" + g.name + "'");
    if (g.degree < 1) {
      throw PresentationError("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                              "; degrees must be positive");
    }
    if (!seen.insert(g.name).second) throw PresentationError("duplicate generator name '" + g.name + "'");
  }
}

std::optional<Letter> GeneratorTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

Letter GeneratorTable::letter(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

TablePtr make_table(std::vector<Generator> generators) {
  return std::make_shared<const GeneratorTable>(std::move(generators));
}

bool same_table(const TablePtr& a, const TablePtr& b) { return a == b || (a && b && *a == *b); }

Word::Word(const GeneratorTable& table, std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter l : letters_) degree_ += table.degree(l);
}

Word::Word(const GeneratorTable& table, std::span<const Letter> letters)
    : Word(table, std::vector<Letter>(letters.begin(), letters.end())) {}

Word Word::operator*(const Word& other) const {
  Word r;
  r.letters_.reserve(letters_.size() + other.letters_.size());
  r.letters_ = letters_;
  r.letters_.insert(r.letters_.end(), other.letters_.begin(), other.letters_.end());
  r.degree_ = degree_ + other.degree_;
  return r;
}

Word Word::splice(std::size_t pos, std::size_t length, int removed_degree, const Word& inserted) const {
  Word r;
  r.letters_.reserve(letters_.size() - length + inserted.size());
  r.letters_.insert(r.letters_.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
  r.letters_.insert(r.letters_.end(), inserted.letters_.begin(), inserted.letters_.end());
  r.letters_.insert(r.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos + length), letters_.end());
  r.degree_ = degree_ - removed_degree + inserted.degree_;
  return r;
}

bool Word::matches_at(std::size_t pos, const Word& pattern) const {
  if (pos + pattern.size() > letters_.size()) return false;
  return std::equal(pattern.letters_.begin(), pattern.letters_.end(),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::string format_word(const GeneratorTable& table, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += table.name(w[i]);
  }
  return out;
}

}  // namespace pontryagin
