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

// Acceptance runner: one PASS/FAIL line per criterion, full-scale parameters.
// Informational checks are printed underneath but never decide the verdict.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sl2coh/cli.hpp"
#include "sl2coh/verify.hpp"

using namespace sl2coh;
using namespace sl2coh::checks;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> one(CheckResult r) { return {std::move(r)}; }

std::vector<CheckResult> pick(std::vector<CheckResult> all, std::initializer_list<std::size_t> which) {
  std::vector<CheckResult> out;
  for (auto k : which) out.push_back(std::move(all.at(k)));
  return out;
}

// Runs the probe through the command line twice and compares the bytes.
CheckResult probe_emission() {
  CheckResult out;
  out.check = "probe-stabilization output is emitted and repeatable";
  const std::vector<std::string> args = {"probe-stabilization", "--p", "3", "--n", "0..4", "--m", "0..8",
                                         "--s-min", "2", "--s-max", "5"};
  std::ostringstream a, b, err;
  const int ca = run_cli(args, a, err), cb = run_cli(args, b, err);
  out.expect(ca == 0 && cb == 0, [&] { return "exit codes " + std::to_string(ca) + ", " + std::to_string(cb); });
  out.expect(a.str() == b.str(), [] { return std::string("outputs differ"); });
  std::size_t lines = 0;
  for (char c : a.str()) lines += c == '\n';
  out.expect(lines == 1 + 5 * 9 * 4, [&] { return "emitted " + std::to_string(lines) + " lines"; });
  return out;
}

}  // namespace

int main() {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  // criteria 9 and 10 read the same sweep
  std::optional<std::vector<CheckResult>> ext_sweep;
  auto ext_low = [&](std::initializer_list<std::size_t> which) {
    if (!ext_sweep) ext_sweep = ext_low_degree({3, 5}, 3000, threads);
    return pick(*ext_sweep, which);
  };
  const std::vector<Criterion> criteria = {
      {1, "three-way N agreement, m <= 2000, n <= 10, p in {3,5,7}",
       [&] { return one(three_way_N({3, 5, 7}, 2000, 10, threads)); }},
      {2, "closed form equals brute force, m <= 5000, p in {3,5}", [&] { return one(closed_form({3, 5}, 5000, threads)); }},
      {3, "vanishing, shift and diagonal properties on the criterion-1 grid",
       [] { return count_properties({3, 5, 7}, 2000, 10); }},
      {4, "N(m,n) <= F(n), m <= 10^5, 1 <= n <= 2p-2, p in {3,5,7}",
       [&] { return one(fibonacci_N({3, 5, 7}, 100000, threads)); }},
      {5, "low-degree classifier and spot values", [] { return std::vector{classifier({3, 5}, 10000), low_degree_spots()}; }},
      {6, "H^n(G,V(m)) = H^{n+1}(B,-m-2), m <= 5000, n <= 8", [] { return one(weyl_shift({3, 5}, 5000, 8)); }},
      {7, "p = 3, n = 7, m = 724 gives dim >= 6", [] { return one(exponential_instance()); }},
      {8, "p = 2 route and bound, m <= 4096, n <= 12", [] { return pick(p2(4096, 12), {0, 1, 2}); }},
      {9, "Ext^3 closed form and cap 3, m1 <= 3000, p in {3,5}",
       [&] { return ext_low({0, 1, 3}); }},
      {10, "Ext^n <= n for n in {1,2}, m1 <= 3000, p in {3,5}",
       [&] { return ext_low({2}); }},
      {11, "Ext bounds, m2 < p^r (r <= 3), m1 <= 10^4, p in {3,5}",
       [&] { return ext_bounds({3, 5}, 10000, 3, 8, 13, threads); }},
      {12, "partition identities and bounds", [&] { return partitions({2, 3}, 10000, 8, 100000, 15, threads); }},
      {13, "finite-group double enumeration and bounds, s <= 3, n <= 6",
       [&] { return finite({3, 5}, 2, 3, 1500, 6, threads); }},
      {14, "stabilization probe is deterministic and emitted",
       [] { return std::vector{stabilization_probe(3, 8, 4, 2, 5), probe_emission()}; }},
      {15, "Specht bounds, lambda <= 200, p in {5,7}", [] { return one(specht({5, 7}, 200)); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && !results.empty();
    std::uint64_t cases = 0, violations = 0;
    for (const auto& r : results) {
      ok = ok && r.passed();
      if (!r.informational) {
        cases += r.cases;
        violations += r.violations;
      }
    }
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (cases=" << cases
              << ", violations=" << violations << ", " << static_cast<int>(secs) << "s)";
    if (!error.empty()) std::cout << " error: " << error;
    std::cout << '\n';
    for (const auto& r : results) {
      std::cout << "      " << (r.informational ? "info" : r.passed() ? "ok  " : "FAIL") << ' ' << r.check;
      if (!r.note.empty()) std::cout << " | " << r.note;
      std::cout << '\n';
      for (const auto& s : r.samples) std::cout << "        " << s << '\n';
    }
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
