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

// Naive reference counts written straight from the definitions. They share no
// code with the library: no memo tables, no residue tricks, no pruning beyond
// what keeps the loops finite.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

inline std::uint64_t power(std::uint64_t p, unsigned e) {
  std::uint64_t x = 1;
  while (e--) x *= p;
  return x;
}

inline std::vector<unsigned> digits(std::uint64_t m, std::uint64_t p) {
  std::vector<unsigned> d;
  do {
    d.push_back(static_cast<unsigned>(m % p));
    m /= p;
  } while (m);
  return d;
}

// Every a in [0, n/2]^r and b in {0, w_i}^r, both equations checked literally.
inline std::uint64_t system_count(std::uint64_t m, std::uint64_t n, std::uint64_t p, unsigned r,
                                  const std::vector<std::uint64_t>& w = {}) {
  std::vector<std::uint64_t> a(r, 0), b(r, 0);
  std::uint64_t count = 0;
  std::function<void(unsigned)> pick_b, pick_a;
  pick_a = [&](unsigned i) {
    if (i == r) {
      std::uint64_t e1 = 0, e2 = b[0];
      for (unsigned k = 0; k < r; ++k) e1 += 2 * a[k] + b[k];
      for (unsigned k = 1; k <= r; ++k) e2 += (a[k - 1] + (k < r ? b[k] : 0)) * power(p, k);
      if (e1 == n && e2 == m) ++count;
      return;
    }
    for (std::uint64_t x = 0; 2 * x <= n; ++x) {
      a[i] = x;
      pick_a(i + 1);
    }
  };
  pick_b = [&](unsigned i) {
    if (i == r) return pick_a(0);
    b[i] = 0;
    pick_b(i + 1);
    b[i] = w.empty() ? 1 : w[i];
    pick_b(i + 1);
  };
  pick_b(0);
  return count;
}

inline unsigned min_length(std::uint64_t m, std::uint64_t p) {
  unsigned r = 1;
  while (power(p, r) <= m) ++r;
  return r;
}

inline std::uint64_t N(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  return system_count(m, n, p, min_length(m, p));
}

// Partitions of n by listing non-increasing sequences.
inline std::uint64_t partitions(unsigned n, unsigned largest) {
  if (n == 0) return 1;
  std::uint64_t c = 0;
  for (unsigned first = std::min(n, largest); first >= 1; --first) c += partitions(n - first, first);
  return c;
}

// Multisets of exactly k powers p^e (e >= min_exp) summing to m, by listing
// non-increasing exponent sequences.
inline std::uint64_t power_partitions(std::uint64_t m, unsigned k, std::uint64_t p, unsigned min_exp,
                                      unsigned max_exp = 63) {
  if (k == 0) return m == 0 ? 1 : 0;
  std::uint64_t c = 0;
  for (unsigned e = min_exp; e <= max_exp; ++e) {
    const std::uint64_t pe = power(p, e);
    if (pe > m) break;
    c += power_partitions(m - pe, k - 1, p, min_exp, e);
  }
  return c;
}

// Strictly increasing exponents s_1 < ... < s_r with sum c_i p^{s_i} = m.
inline std::uint64_t exponent_vectors(std::uint64_t m, const std::vector<unsigned>& c, std::uint64_t p) {
  std::uint64_t count = 0;
  std::function<void(std::size_t, unsigned, std::uint64_t)> go = [&](std::size_t i, unsigned lo, std::uint64_t sum) {
    if (i == c.size()) {
      if (sum == m) ++count;
      return;
    }
    for (unsigned s = lo; c[i] * power(p, s) + sum <= m; ++s) go(i + 1, s + 1, sum + c[i] * power(p, s));
  };
  go(0, 0, 0);
  return count;
}

// p = 2 system: a_1 + ... + a_r = parts, 2 a_1 + 4 a_2 + ... = rhs.
inline std::uint64_t p2_system(std::uint64_t rhs, std::uint64_t parts) {
  return power_partitions(rhs, static_cast<unsigned>(parts), 2, 1);
}

}  // namespace oracle
