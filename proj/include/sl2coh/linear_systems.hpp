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
#include <vector>

#include "sl2coh/padic.hpp"

namespace sl2coh {

/**
 * Right-hand sides and shape of the two-equation system
 *
 *   2 * sum a_i + sum b_i = n
 *   b_1 + sum_{i=1}^{r-1} (a_i + b_{i+1}) p^i + a_r p^r = m
 *
 * with a_i >= 0 and b_i in {0, d_i}. The plain system has every d_i = 1.
 */
struct SystemQuery {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t p = 3;
  unsigned r = 1;
  std::vector<std::uint64_t> weights;  // d_1..d_r; empty means all ones

  /// Plain query with r the smallest length for which the count has stabilized.
  static SystemQuery stabilized(std::uint64_t m, std::uint64_t n, std::uint64_t p);

  std::uint64_t weight(unsigned i) const { return weights.empty() ? 1 : weights[i]; }
  void validate() const;
};

struct SolutionPair {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

/// Whether (a, b) satisfies both equations of q (and b_i in {0, d_i}).
bool is_solution(const SystemQuery& q, const SolutionPair& s);

/// Smallest r >= 1 with p^r > m.
unsigned stable_length(std::uint64_t m, std::uint64_t p);

/// All solutions, ordered lexicographically on (b, a).
std::vector<SolutionPair> enumerate_solutions(const SystemQuery& q);

/// Number of solutions of q, same search as enumerate_solutions without storing them.
Count count_solutions(const SystemQuery& q);

/// N(m, n) by direct enumeration at the stable length. Accepts p = 2.
Count count_N_bruteforce(std::uint64_t m, std::uint64_t n, std::uint64_t p);

/// N(m, n) through the two-term recursion
///   N(m,n) = N(m-p, n-2) + N(m/p, n)         if p | m
///   N(m,n) = N(m-p, n-2) + N((m-1)/p, n-1)   if m = 1 mod p
/// memoized per thread. Odd p only.
Count count_N(std::int64_t m, std::int64_t n, std::uint64_t p);

/// N(m, n) through the sum over the first coefficient a_1, memoized separately
/// from count_N so the two recursions cross-check each other. Odd p only.
Count count_N_sum_form(std::int64_t m, std::int64_t n, std::uint64_t p);

/// Binomial closed form, valid for 1 <= n <= 2p - 2. Odd p only.
Count closed_form_N(std::uint64_t m, std::uint64_t n, std::uint64_t p);

/// Solutions of the weighted system at the stable length. Only the first
/// stable_length(m, p) weights are read; fewer than that is an error.
Count count_N_weighted(std::uint64_t m, std::uint64_t n, std::uint64_t p,
                       const std::vector<std::uint64_t>& weights);

/// sum_{j=1}^{h} p^j.
std::uint64_t max_form_weight(unsigned h, std::uint64_t p);

/// Drops the calling thread's memo tables for count_N and count_N_sum_form.
void clear_count_caches();

}  // namespace sl2coh
