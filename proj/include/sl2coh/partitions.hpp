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
#include <optional>
#include <vector>

#include "sl2coh/padic.hpp"

namespace sl2coh {

/// Ordered tuple of positive integers.
struct Composition {
  std::vector<unsigned> parts;

  unsigned total() const;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Classical partition function p(n).
Count partition_count(unsigned n);

/// Number of compositions of n (n >= 1).
Count compositions_count(unsigned n);

/// Yields each composition of n exactly once, in lexicographic order
/// (1,...,1) first and (n) last.
class CompositionGenerator {
public:
  explicit CompositionGenerator(unsigned n);

  std::optional<Composition> next();

private:
  unsigned n_;
  std::vector<unsigned> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Composition> compositions(unsigned n);

/// Multisets of n powers p^e (each e >= min_exp) summing to m.
Count count_pAn(std::uint64_t m, unsigned n, std::uint64_t p, unsigned min_exp = 0);

/// Strictly increasing exponent vectors s with m = sum c_i p^{s_i}.
Count count_B_Ac(std::uint64_t m, const Composition& c, std::uint64_t p);

}  // namespace sl2coh
