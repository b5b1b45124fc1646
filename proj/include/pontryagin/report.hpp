#pragma once

#include <string>
#include <vector>

namespace pontryagin {

enum class Status { Pass, Fail, Info };

std::string to_string(Status s);

/// One line of a check report.
struct ReportEntry {
  std::string check;
  int degree = -1;
  std::string witness;
  Status status = Status::Pass;
};

/// Outcome of a verification routine.  Informational entries never count as
/// failures.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  void add(std::string check, int degree, std::string witness, bool passed) {
    entries_.push_back({std::move(check), degree, std::move(witness), passed ? Status::Pass : Status::Fail});
  }
  void info(std::string check, int degree, std::string witness) {
    entries_.push_back({std::move(check), degree, std::move(witness), Status::Info});
  }
  void merge(const Report& other) { entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end()); }

  const std::string& title() const { return title_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  /// [{"check":..,"degree":..,"witness":..,"status":"pass"|"fail"|"info"},...]
  std::string to_json() const;
  std::string to_table() const;

 private:
  std::string title_;
  std::vector<ReportEntry> entries_;
};

}  // namespace pontryagin
