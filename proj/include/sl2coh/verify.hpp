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
#include <vector>

namespace sl2coh {

enum class Scale { quick, full };

/// Outcome of one named check: how many cases ran and how many failed.
/// Informational checks report an observation and never count as failures.
struct CheckResult {
  std::string suite;
  std::string check;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  bool informational = false;
  std::string note;
  std::vector<std::string> samples;  // first few failures

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases;
    if (ok) return;
    ++violations;
    if (samples.size() < 5) samples.push_back(describe());
  }

  void merge(const CheckResult& other);
  bool passed() const { return informational || violations == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, Scale scale, unsigned threads = 1);

// Individual checks. Suites and the acceptance runner call these with their
// own ranges.
namespace checks {

using Primes = std::vector<std::uint64_t>;

CheckResult three_way_N(const Primes& primes, std::uint64_t m_max, std::uint64_t n_max, unsigned threads);
CheckResult weighted_ones(const Primes& primes, std::uint64_t m_max, std::uint64_t n_max);
CheckResult closed_form(const Primes& primes, std::uint64_t m_max, unsigned threads);
std::vector<CheckResult> count_properties(const Primes& primes, std::uint64_t m_max, std::uint64_t n_max);
CheckResult stabilization_in_r(std::uint64_t p, std::uint64_t m_max, std::uint64_t n_max);
CheckResult monotone_injection(std::uint64_t p, std::uint64_t m_max, std::uint64_t n_max);
CheckResult weighted_bound(std::uint64_t p, std::uint64_t m_max, std::uint64_t n_max, std::uint64_t seed);
CheckResult maximal_shape(const Primes& primes, std::uint64_t m_max);
CheckResult bound_constants();

CheckResult fibonacci_N(const Primes& primes, std::uint64_t m_max, unsigned threads);
CheckResult fibonacci_beyond(const Primes& primes, std::uint64_t m_max);
CheckResult weyl_bounds(const Primes& primes, std::uint64_t n_max, std::uint64_t m_max);

CheckResult weyl_shift(const Primes& primes, std::uint64_t m_max, std::uint64_t n_max);
CheckResult h0_law(const Primes& primes, std::uint64_t m_max);
CheckResult classifier(const Primes& primes, std::uint64_t m_max);
CheckResult low_degree_spots();
CheckResult exponential_instance();

std::vector<CheckResult> ext_low_degree(const Primes& primes, std::uint64_t m1_max, unsigned threads);
CheckResult ext3_case_table(const Primes& primes, std::uint64_t m1_max);
CheckResult ext_even_terms(const Primes& primes, std::uint64_t diff_max);
CheckResult steinberg(std::uint64_t p, std::uint64_t a_max, std::int64_t n_max);

std::vector<CheckResult> ext_bounds(const Primes& primes, std::uint64_t m1_max, unsigned r_max, unsigned exp_n_max,
                                    std::uint64_t exp_stride, unsigned threads);
CheckResult specht(const Primes& primes, std::uint64_t lambda_max);

std::vector<CheckResult> partitions(const Primes& primes, std::uint64_t m_max, unsigned n_max,
                                    std::uint64_t bound_m_max, unsigned bound_n_max, unsigned threads);

std::vector<CheckResult> p2(std::uint64_t m_max, std::uint64_t n_max);

std::vector<CheckResult> finite(const Primes& primes, std::size_t s_full_max, std::size_t s_sampled,
                                std::uint64_t samples, unsigned n_max, unsigned threads);

CheckResult stabilization_probe(std::uint64_t p, std::uint64_t m_max, unsigned n_max, std::size_t s_min,
                                std::size_t s_max);

}  // namespace checks

}  // namespace sl2coh
