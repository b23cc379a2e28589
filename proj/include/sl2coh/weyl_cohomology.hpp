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

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sl2coh/padic.hpp"

namespace sl2coh {

/// dim H^n(B, -m) = N(m/2, n) for odd p; zero at odd m. Rejects p = 2.
Count dim_B_cohomology(std::int64_t n, std::int64_t m, std::uint64_t p);

/// dim H^n(G, V(m)) for G = SL2.
///   odd p: N(m/2 + 1, n + 1)
///   p = 2: partitions of m + 2 into n + 1 parts from {2, 4, 8, ...}
/// Zero for negative n or m and for odd m.
Count dim_weyl_cohomology(std::int64_t n, std::int64_t m, std::uint64_t p);

/// Solutions (a_1..a_r) of a_1 + ... + a_r = parts, 2a_1 + ... + 2^r a_r = rhs
/// by plain nested enumeration. H^n(G, V(m)) at p = 2 is rhs = m + 2, parts = n + 1.
Count count_p2_system_bruteforce(std::uint64_t rhs, std::uint64_t parts);

/// dim H^n(G, V(m)) for n in {1, 2, 3} read off the base-p digit pattern of
/// m/2 + 1 against the families 2p^u - 2e, 2p^u + 2p^v - 2, 4p^u - 2, ... .
Count low_degree_classifier(unsigned n, std::int64_t m, std::uint64_t p);

struct WeylBoundViolation {
  std::uint64_t n;
  std::uint64_t m;
  Count dim;
  double bound;
};

struct WeylBoundReport {
  std::uint64_t p = 0;
  std::uint64_t cases = 0;
  std::vector<WeylBoundViolation> violations;
  std::map<std::uint64_t, Count> max_dim;  // per degree n
  std::map<std::uint64_t, std::uint64_t> argmax_m;
};

/// Checks the degree-wise upper bounds over 0 <= m <= m_max, n_min <= n <= n_max:
///   odd p, n <= 2p - 3: F(n + 1)
///   odd p, n >= 1:      C_{n+1}
///   p = 2, n >= 1:      e^{2 pi (n+1)/sqrt 3} 2^{n+1}
WeylBoundReport verify_weyl_bounds(std::uint64_t p, std::uint64_t n_min, std::uint64_t n_max, std::uint64_t m_max);

}  // namespace sl2coh
