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
#include <string>
#include <vector>

#include "sl2coh/padic.hpp"

namespace sl2coh {

enum class BlockRelation { SteinbergReduce, EvenSameBlock, OddSameBlock, DifferentBlock, Equal };

const char* to_string(BlockRelation b);

/// Ext^n(V(m2), V(m1)) with m1 = pa + i, m2 = pb + j, 0 <= i, j <= p-1.
struct ExtQuery {
  std::uint64_t p = 3;
  std::int64_t n = 0;
  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;
  std::uint64_t a = 0, i = 0, b = 0, j = 0;

  /// Rejects p = 2 and m1 < m2.
  static ExtQuery make(std::int64_t n, std::uint64_t m2, std::uint64_t m1, std::uint64_t p);
};

BlockRelation classify_block(std::uint64_t m1, std::uint64_t m2, std::uint64_t p);

/// dim Ext^n_G(V(m2), V(m1)) by the block rules and the even/odd recursions.
/// m2 = 0 is answered directly as dim H^n(G, V(m1)).
Count dim_ext(std::int64_t n, std::uint64_t m2, std::uint64_t m1, std::uint64_t p);

/// Degree-3 value assembled from closed low-degree pieces:
///   even block: H^2(V(a-b-2)) + H^0(V(a-b-4))
///   odd block:  H^1(V(a-b-3)) + Ext^3(V(b), V(a-1))
Count ext3_closed(std::uint64_t m2, std::uint64_t m1, std::uint64_t p);

/// The degree-3 value read off literal case lists by digit shape (kept for comparison;
/// they disagree with the recursion on some pairs).
Count ext3_case_lists(std::uint64_t m2, std::uint64_t m1, std::uint64_t p);

/// Ext^n_{SL2}(V(2 m_lambda), V(2 m_mu)) for precomputed pairings m_mu >= m_lambda.
Count rank_reduction_dim(std::int64_t n, std::uint64_t m_lambda, std::uint64_t m_mu, std::uint64_t p);

/// dim H^n(Sigma_d, S^lambda) for lambda = (lambda1, lambda2), via
/// Ext^n(V(2(lambda1 - lambda2)), V(2(lambda1 + lambda2))). Needs n <= 2p-4.
Count specht_dim(std::int64_t n, std::uint64_t lambda1, std::uint64_t lambda2, std::uint64_t p);

/// Smallest r >= 1 with 2(lambda1 - lambda2) < p^r.
unsigned specht_level(std::uint64_t lambda1, std::uint64_t lambda2, std::uint64_t p);

/// Smallest r >= 1 with m < p^r.
unsigned restricted_level(std::uint64_t m, std::uint64_t p);

/// F(n+1) + (r-1) F(n), with F(0) = 0.
Count fibonacci_ext_bound(unsigned n, unsigned r);

void clear_ext_cache();

struct ExtSweep {
  std::uint64_t p = 3;
  unsigned n_max = 3;
  std::uint64_t m1_max = 1000;
  std::uint64_t m2_limit = 27;  // m2 < m2_limit
  std::uint64_t m1_stride = 1;  // sampling step for m1
  bool fibonacci = true;        // F(n+1) + (r-1)F(n), only for n <= 2p-3
  bool exponential = true;      // C_{n+2} + (r-1)C_n
  unsigned threads = 1;
};

struct ExtBoundViolation {
  std::int64_t n;
  std::uint64_t m2;
  std::uint64_t m1;
  Count dim;
  double bound;
  std::string which;
};

struct ExtBoundReport {
  std::uint64_t p = 0;
  std::uint64_t cases = 0;
  std::vector<ExtBoundViolation> violations;
  std::map<unsigned, Count> max_dim;
  // Even-block pairs with n >= a-b-1 where the value exceeds 1.
  std::uint64_t tail_checks = 0;
  std::vector<ExtBoundViolation> tail_anomalies;
};

ExtBoundReport verify_ext_bounds(const ExtSweep& sweep);

}  // namespace sl2coh
