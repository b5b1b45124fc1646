#include "pontryagin/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace pontryagin {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.status == Status::Fail; }));
}

std::string Report::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries_) {
    j.push_back({{"check", e.check}, {"degree", e.degree}, {"witness", e.witness}, {"status", to_string(e.status)}});
  }
  return j.dump();
}

std::string Report::to_table() const {
  std::size_t width = 5;
  for (const auto& e : entries_) width = std::max(width, e.check.size());
  std::ostringstream out;
  if (!title_.empty()) out << title_ << '\n';
  for (const auto& e : entries_) {
    out << (e.status == Status::Pass ? "PASS " : e.status == Status::Fail ? "FAIL " : "INFO ") << e.check
        << std::string(width - e.check.size() + 2, ' ');
    if (e.degree >= 0) out << "d=" << e.degree << "  ";
    out << e.witness << '\n';
  }
  return out.str();
}

}  // namespace pontryagin
