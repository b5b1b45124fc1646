#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pontryagin/element.hpp"

namespace testing_support {

// Coefficients of num/den up to degree n, den[0] == 1, by the plain recurrence.
inline std::vector<std::int64_t> expand(const std::vector<std::int64_t>& num, const std::vector<std::int64_t>& den,
                                        int n) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) + 1, 0);
  for (int d = 0; d <= n; ++d) {
    std::int64_t v = d < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(d)] : 0;
    for (int k = 1; k <= d && k < static_cast<int>(den.size()); ++k) {
      v -= den[static_cast<std::size_t>(k)] * out[static_cast<std::size_t>(d - k)];
    }
    out[static_cast<std::size_t>(d)] = v;
  }
  return out;
}

inline std::vector<std::int64_t> glambda_f2_dims(int n) { return expand({1, 3, 5, 7, 7, 5, 3, 1}, {1, 0, -1, -1, -1}, n); }
inline std::vector<std::int64_t> glambda_odd_dims(int n) { return expand({1, 1, 0, 2, 2, 0, 1, 1}, {1, 0, 0, 0, -1}, n); }

// Random element over the given table: up to `terms` words of total degree
// at most `max_degree`, built letter by letter.
inline pontryagin::Element random_element(const pontryagin::Field& f, const pontryagin::TablePtr& table, int max_degree,
                                          int terms, std::mt19937_64& rng, bool homogeneous) {
  pontryagin::Element e(f, table);
  const int target = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
  for (int i = 0; i < terms; ++i) {
    const int d = homogeneous ? target : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
    std::vector<pontryagin::Letter> letters;
    int deg = 0;
    for (int guard = 0; deg < d && guard < 64; ++guard) {
      auto l = static_cast<pontryagin::Letter>(rng() % table->size());
      if (deg + table->degree(l) > d) continue;
      letters.push_back(l);
      deg += table->degree(l);
    }
    if (deg != d) continue;
    auto c = static_cast<std::int64_t>(rng() % 5) - 2;
    e.add_term(pontryagin::Word(*table, letters), f.from_int(c == 0 ? 1 : c));
  }
  return e;
}

}  // namespace testing_support
