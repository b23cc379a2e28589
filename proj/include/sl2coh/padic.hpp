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
#include <span>
#include <utility>
#include <vector>

namespace sl2coh {

/// Exact non-negative count. Arithmetic on counts goes through the checked
/// helpers below, which throw std::overflow_error instead of wrapping.
using Count = std::uint64_t;

Count checked_add(Count x, Count y);
Count checked_mul(Count x, Count y);

/// p^e, throwing std::overflow_error if the result exceeds 64 bits.
std::uint64_t ipow(std::uint64_t p, unsigned e);

/// Trial-division primality test; only meant for the small bases in scope.
bool is_prime(std::uint64_t p);

/// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint64_t p);

/// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(std::uint64_t p, const char* what);

/**
 * Base-p digits of a non-negative integer, least significant first.
 *
 * Invariants: every digit lies in [0, p-1], the digits reassemble to m, and
 * the top digit is non-zero unless m = 0, in which case digits() = {0}.
 */
class PAdicExpansion {
public:
  PAdicExpansion(std::uint64_t m, std::uint64_t p);

  std::uint64_t value() const { return m_; }
  std::uint64_t base() const { return p_; }
  std::span<const unsigned> digits() const { return digits_; }
  unsigned digit(std::size_t i) const { return i < digits_.size() ? digits_[i] : 0u; }

  /// Sum of the digits.
  unsigned height() const;

  /// Index of the top digit (0 for m < p).
  unsigned top_index() const { return static_cast<unsigned>(digits_.size() - 1); }

  /// Number of zeros among c_1, ..., c_{top_index()}.
  unsigned interior_zeros() const;

  /// Reassembles sum c_i p^i; used by round-trip tests.
  std::uint64_t reassemble() const;

private:
  std::uint64_t m_;
  std::uint64_t p_;
  std::vector<unsigned> digits_;
};

PAdicExpansion expand(std::uint64_t m, std::uint64_t p);

unsigned height(std::uint64_t m, std::uint64_t p);

/// (r_m, s_m): index of the top digit and the number of zero digits among
/// c_1..c_{r_m}. Rejects m = 0, where r_m is undefined.
std::pair<unsigned, unsigned> r_s_stats(std::uint64_t m, std::uint64_t p);

/// F(1) = F(2) = 1. Rejects n = 0; overflows past F(93).
Count fibonacci(unsigned n);

/// C(n, k), zero outside 0 <= k <= n.
Count binomial(std::int64_t n, std::int64_t k);

}  // namespace sl2coh
