#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pontryagin {

struct VerifyOptions {
  int max_degree = 16;
  int oracle_max_degree = 8;
  std::uint64_t seed = 7;
  std::uint64_t max_words = 500000;
};

/// One named check of the verification suite.  `source` says where the
/// expected value comes from: "reported" (a published value), "derived"
/// (computed independently), or "identity" (an equation between two
/// computations).
struct VerifyCheck {
  std::string name;
  std::string anchor;
  std::string source;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct VerifyResult {
  std::string suite;
  VerifyOptions options;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  std::string to_json() const;
  std::string to_table() const;
};

/// Names accepted for the suite.
const std::vector<std::string>& verify_suite_names();

/// Runs every check.  Deterministic for fixed options.
VerifyResult run_verify_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace pontryagin
