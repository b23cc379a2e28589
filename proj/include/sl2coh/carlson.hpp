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
#include <string>
#include <vector>

#include "sl2coh/padic.hpp"

namespace sl2coh {

/// Simple SL2(p^s)-module named by an s-tuple of p-restricted weights.
struct SimpleLabel {
  std::uint64_t p = 3;
  std::vector<unsigned> weights;

  std::size_t s() const { return weights.size(); }
  unsigned max_weight() const;
  void validate() const;

  static SimpleLabel zero(std::uint64_t p, std::size_t s);
  /// Base-p digits of m padded to s entries; rejects m >= p^s.
  static SimpleLabel of_integer(std::uint64_t m, std::uint64_t p, std::size_t s);
  /// Parses "d1,d2,...".
  static SimpleLabel parse(const std::string& text, std::uint64_t p);

  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
};

struct CarlsonSolution {
  std::vector<unsigned> a;
  std::vector<unsigned> b;
  std::vector<unsigned> k;
};

/// All (a, b, k) meeting the five conditions for Ext^n(L_d, L_f). Loop order:
/// b, then a, then k.
std::vector<CarlsonSolution> carlson_solutions(unsigned n, const SimpleLabel& d, const SimpleLabel& f);

/// dim Ext^n_{SL2(p^s)}(L_d, L_f) = |carlson_solutions|.
Count dim_ext_finite(unsigned n, const SimpleLabel& d, const SimpleLabel& f);

/// Second enumerator with k outermost and a scanned coordinatewise; same count.
Count dim_ext_finite_kfirst(unsigned n, const SimpleLabel& d, const SimpleLabel& f);

/// dim H^n(SL2(p^s), L_f) = dim_ext_finite(n, 0, f).
Count dim_H_finite(unsigned n, const SimpleLabel& f);

/// Multiplier t in 2(p sum a_i p^{i-1} + sum b_i (1+d_i) p^{i-1})
///   = sum (d_i - f_i + 2k_i) p^{i-1} + t (p^s - 1).
std::int64_t carlson_multiplier(const CarlsonSolution& sol, const SimpleLabel& d, const SimpleLabel& f);

struct FiniteSweep {
  std::uint64_t p = 3;
  std::size_t s = 1;
  unsigned n_max = 4;
  std::uint64_t sample = 0;  // 0: every (d, f); otherwise this many random pairs
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct FiniteViolation {
  unsigned n;
  SimpleLabel d;
  SimpleLabel f;
  Count dim;
  Count other;   // second enumerator, or the offending t for window checks
  double bound;
  std::string which;
};

struct FiniteReport {
  std::uint64_t p = 0;
  std::size_t s = 0;
  std::uint64_t cases = 0;
  std::uint64_t solutions = 0;
  std::vector<FiniteViolation> violations;
  Count max_dim = 0;
  std::int64_t t_min = 0, t_max = 0;   // observed multipliers
  std::uint64_t t_outside = 0;         // solutions with t outside [-3, 2n + 2 max d + 3]
  std::uint64_t hom_above_one = 0;     // d = f, n = 0 with more than one solution
};

/// Checks the double enumeration, the bound
///   (2n + 2 max d_i + 7) C_n prod (min(d_i, f_i) + 1)   (n >= 1)
/// and its d = 0 case (2n + 7) C_n, and records the multiplier window.
FiniteReport verify_finite_bound(const FiniteSweep& sweep);

struct StabilizationRow {
  std::size_t s;
  Count dim;
};

struct StabilizationProbe {
  unsigned n;
  std::uint64_t m;
  std::uint64_t p;
  std::vector<StabilizationRow> rows;
  std::optional<std::size_t> stable_from;  // first s from which the tail is constant
  bool tail_constant = false;              // last two values agree
};

/// dim H^n(SL2(p^s), L(m)) for s in [s_min, s_max]; needs m < p^{s_min}.
StabilizationProbe generic_stabilization_probe(unsigned n, std::uint64_t m, std::uint64_t p, std::size_t s_min,
                                               std::size_t s_max);

}  // namespace sl2coh
