// Copyright 2026 The sl2coh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sl2coh/weyl_cohomology.hpp"

#include <array>
#include <stdexcept>

#include "sl2coh/bounds.hpp"
#include "sl2coh/linear_systems.hpp"
#include "sl2coh/partitions.hpp"

namespace sl2coh {

Count dim_B_cohomology(std::int64_t n, std::int64_t m, std::uint64_t p) {
  require_odd_prime(p, "B-cohomology");
  if (n < 0 || m < 0 || m % 2 != 0) return 0;
  return count_N(m / 2, n, p);
}

Count dim_weyl_cohomology(std::int64_t n, std::int64_t m, std::uint64_t p) {
  require_prime(p);
  if (n < 0 || m < 0 || m % 2 != 0) return 0;
  if (p == 2) return count_pAn(static_cast<std::uint64_t>(m) + 2, static_cast<unsigned>(n + 1), 2, 1);
  return count_N(m / 2 + 1, n + 1, p);
}

namespace {

Count p2_search(std::uint64_t rest_value, std::uint64_t rest_count, std::uint64_t power) {
  if (power > rest_value) return rest_value == 0 && rest_count == 0 ? 1 : 0;
  Count total = 0;
  for (std::uint64_t a = 0; a <= rest_count && a * power <= rest_value; ++a)
    total = checked_add(total, p2_search(rest_value - a * power, rest_count - a, power * 2));
  return total;
}

}  // namespace

Count count_p2_system_bruteforce(std::uint64_t rhs, std::uint64_t parts) {
  if (rhs == 0) return parts == 0 ? 1 : 0;
  return p2_search(rhs, parts, 2);
}

namespace {

// Digit pattern of x = m/2 + 1: the unit digit, how many higher digits equal
// 1, how many equal 2. Any higher digit above 2 matches no family.
struct Pattern {
  unsigned unit;
  unsigned ones;
  unsigned twos;
};

struct Family {
  unsigned degree;
  Pattern pattern;
  Count dim;
  const char* shape;  // in terms of m, exponents distinct and positive
};

constexpr std::array kFamilies = {
    Family{1, {0, 1, 0}, 1, "2p^u-2"},
    Family{1, {1, 1, 0}, 1, "2p^u"},
    Family{1, {0, 2, 0}, 1, "2p^u+2p^v-2"},

    Family{2, {0, 2, 0}, 2, "2p^u+2p^v-2"},
    Family{2, {1, 1, 0}, 1, "2p^u"},
    Family{2, {0, 0, 1}, 1, "4p^u-2"},
    Family{2, {1, 2, 0}, 1, "2p^u+2p^v"},
    Family{2, {0, 3, 0}, 1, "2p^u+2p^v+2p^w-2"},

    Family{3, {0, 3, 0}, 3, "2p^u+2p^v+2p^w-2"},
    Family{3, {1, 2, 0}, 2, "2p^u+2p^v"},
    Family{3, {0, 0, 1}, 1, "4p^u-2"},
    Family{3, {1, 0, 1}, 1, "4p^u"},
    Family{3, {0, 2, 0}, 1, "2p^u+2p^v-2"},
    Family{3, {0, 1, 1}, 1, "4p^u+2p^v-2"},
    Family{3, {1, 3, 0}, 1, "2p^u+2p^v+2p^w"},
    Family{3, {0, 4, 0}, 1, "2p^u+2p^v+2p^w+2p^x-2"},
};

}  // namespace

Count low_degree_classifier(unsigned n, std::int64_t m, std::uint64_t p) {
  require_odd_prime(p, "the low-degree classifier");
  if (n < 1 || n > 3) throw std::invalid_argument("low-degree classifier covers n = 1, 2, 3 only");
  if (m < 0 || m % 2 != 0) return 0;
  const auto x = expand(static_cast<std::uint64_t>(m / 2 + 1), p);
  Pattern pat{x.digit(0), 0, 0};
  for (std::size_t i = 1; i < x.digits().size(); ++i) {
    const unsigned c = x.digits()[i];
    if (c == 1) ++pat.ones;
    else if (c == 2) ++pat.twos;
    else if (c > 2) return 0;
  }
  for (const auto& f : kFamilies)
    if (f.degree == n && f.pattern.unit == pat.unit && f.pattern.ones == pat.ones && f.pattern.twos == pat.twos)
      return f.dim;
  return 0;
}

WeylBoundReport verify_weyl_bounds(std::uint64_t p, std::uint64_t n_min, std::uint64_t n_max, std::uint64_t m_max) {
  require_prime(p);
  WeylBoundReport report;
  report.p = p;
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    std::vector<BoundConstant> bounds;
    if (p == 2) {
      if (n >= 1) bounds.push_back(power_partition_bound(static_cast<unsigned>(n + 1)));
    } else {
      if (n <= 2 * p - 3) {
        const Count f = fibonacci(static_cast<unsigned>(n + 1));
        bounds.push_back({static_cast<unsigned>(n + 1), static_cast<double>(f), "F(" + std::to_string(n + 1) + ")"});
      }
      if (n >= 1) bounds.push_back(bound_C(static_cast<unsigned>(n + 1)));
    }
    Count best = 0;
    std::uint64_t best_m = 0;
    for (std::uint64_t m = 0; m <= m_max; m += 2) {
      const Count d = dim_weyl_cohomology(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m), p);
      ++report.cases;
      if (d > best) {
        best = d;
        best_m = m;
      }
      for (const auto& b : bounds)
        if (!within(d, b)) report.violations.push_back({n, m, d, b.value});
    }
    report.max_dim[n] = best;
    report.argmax_m[n] = best_m;
  }
  return report;
}

}  // namespace sl2coh
