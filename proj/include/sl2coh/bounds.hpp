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
#include <string>

namespace sl2coh {

/**
 * An irrational bound evaluated with every operation rounded toward +inf,
 * so the stored double is never below the exact constant.
 */
struct BoundConstant {
  unsigned n = 0;
  double value = 0.0;
  std::string name;
};

/// Working precision (bits) used when none is given.
inline constexpr long kDefaultBoundPrecision = 160;

/// n * 4^n * e^{2 pi n / sqrt(3)}.
BoundConstant bound_C(unsigned n, long precision_bits = kDefaultBoundPrecision);

/// e^{pi sqrt(2n/3)}, the classical upper bound for the partition function.
BoundConstant hardy_ramanujan_bound(unsigned n, long precision_bits = kDefaultBoundPrecision);

/// e^{2 pi n / sqrt(3)} * 2^n, the bound on partitions of any m into n powers of p.
BoundConstant power_partition_bound(unsigned n, long precision_bits = kDefaultBoundPrecision);

/// k * b, rounded up.
BoundConstant scale_up(const BoundConstant& b, std::uint64_t k);

/// a + b, rounded up.
BoundConstant add_up(const BoundConstant& a, const BoundConstant& b);

/// Exact comparison count <= bound.
bool within(std::uint64_t count, const BoundConstant& bound);

/// Exact comparison count < bound.
bool strictly_below(std::uint64_t count, const BoundConstant& bound);

}  // namespace sl2coh
