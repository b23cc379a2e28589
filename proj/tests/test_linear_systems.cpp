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

#include <algorithm>
#include <tuple>

#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "sl2coh/linear_systems.hpp"

using namespace sl2coh;

namespace {

// Independent count of the system at p = 3, frozen: rows m = 0..30, columns n = 0..8.
constexpr int kN3[31][9] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 0, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 2, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 2, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 2, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 2, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 0, 1, 2, 1}, {0, 0, 0, 0, 1, 1, 0, 1, 2}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 2, 1, 0, 1}, {0, 0, 0, 0, 0, 1, 2, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 2, 1}, {0, 0, 0, 0, 0, 0, 0, 1, 2}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 0, 0, 1, 1, 0, 1}, {0, 0, 1, 1, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 2, 1, 0, 1, 2, 1}};

}  // namespace

TEST_SUITE("linear-systems") {
  TEST_CASE("frozen table at p = 3") {
    for (int m = 0; m <= 30; ++m)
      for (int n = 0; n <= 8; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(count_N(m, n, 3) == static_cast<Count>(kN3[m][n]));
        CHECK(count_N_sum_form(m, n, 3) == static_cast<Count>(kN3[m][n]));
        CHECK(count_N_bruteforce(m, n, 3) == static_cast<Count>(kN3[m][n]));
      }
  }

  TEST_CASE("a known solution at m = 138 is enumerated") {
    SystemQuery q = SystemQuery::stabilized(138, 8, 3);
    CHECK(q.r == 5);
    const auto sols = enumerate_solutions(q);
    SolutionPair want{{0, 2, 0, 0, 0}, {0, 1, 1, 1, 1}};
    CHECK(std::count_if(sols.begin(), sols.end(), [&](const SolutionPair& s) { return s.a == want.a && s.b == want.b; }) == 1);
    CHECK(is_solution(q, want));
    CHECK(sols.size() == oracle::N(138, 8, 3));
  }

  TEST_CASE("enumeration order is lexicographic in (b, a)") {
    for (std::uint64_t m : {138, 400, 729})
      for (std::uint64_t n : {6, 8, 9}) {
        const auto sols = enumerate_solutions(SystemQuery::stabilized(m, n, 3));
        for (std::size_t k = 1; k < sols.size(); ++k)
          CHECK(std::tie(sols[k - 1].b, sols[k - 1].a) < std::tie(sols[k].b, sols[k].a));
      }
  }

  TEST_CASE("trivial and empty cases") {
    for (std::uint64_t p : {2, 3, 5})
      for (unsigned r = 1; r <= 4; ++r) {
        SystemQuery q{0, 0, p, r, {}};
        const auto sols = enumerate_solutions(q);
        REQUIRE(sols.size() == 1);
        CHECK(std::all_of(sols[0].a.begin(), sols[0].a.end(), [](auto x) { return x == 0; }));
      }
    for (std::uint64_t n = 0; n <= 12; ++n) CHECK(enumerate_solutions(SystemQuery::stabilized(2, n, 3)).empty());
  }

  TEST_CASE("spot values") {
    CHECK(count_N_bruteforce(6, 4, 3) == 1);
    CHECK(count_N_bruteforce(6, 5, 3) == 0);
    CHECK(count_N_bruteforce(12, 3, 3) == 2);
    CHECK(count_N(0, 0, 3) == 1);
    CHECK(count_N(1, 1, 5) == 1);
    CHECK(count_N(138, 8, 3) == count_N_bruteforce(138, 8, 3));
    CHECK(count_N_sum_form(6, 4, 3) == 1);
    CHECK(count_N_sum_form(12, 3, 3) == 2);
    for (std::int64_t n = 0; n <= 12; ++n) CHECK(count_N_sum_form(5, n, 3) == 0);
    CHECK(count_N(-3, 2, 3) == 0);
    CHECK(count_N(4, -1, 3) == 0);
  }

  TEST_CASE("closed form") {
    CHECK(closed_form_N(12, 3, 3) == 2);
    CHECK(closed_form_N(12, 4, 3) == 1);
    CHECK(closed_form_N(12, 1, 3) == 0);
    // unit digit 2 cannot be matched by b_1 in {0, 1}
    CHECK(closed_form_N(2, 2, 5) == 0);
    CHECK_THROWS_AS(closed_form_N(12, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_N(12, 0, 3), std::invalid_argument);
    for (std::uint64_t p : {3, 5, 7})
      for (std::uint64_t m = 0; m <= 400; ++m)
        for (std::uint64_t n = 1; n <= 2 * p - 2; ++n) CHECK(closed_form_N(m, n, p) == count_N_bruteforce(m, n, p));
  }

  TEST_CASE("p = 2 is for the brute force only") {
    CHECK(count_N_bruteforce(6, 3, 2) == oracle::N(6, 3, 2));
    CHECK_THROWS_AS(count_N(6, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_N_sum_form(6, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_N(6, 1, 2), std::invalid_argument);
  }

  TEST_CASE("brute force against the naive oracle") {
    for (std::uint64_t p : {2, 3, 5})
      for (std::uint64_t m = 0; m <= 130; ++m)
        for (std::uint64_t n = 0; n <= 7; ++n) {
          CAPTURE(p);
          CAPTURE(m);
          CAPTURE(n);
          CHECK(count_N_bruteforce(m, n, p) == oracle::N(m, n, p));
        }
  }

  TEST_CASE("stabilization in r") {
    for (std::uint64_t m = 0; m <= 90; ++m)
      for (std::uint64_t n = 0; n <= 7; ++n) {
        SystemQuery q = SystemQuery::stabilized(m, n, 3);
        const auto base = count_solutions(q);
        q.r += 2;
        CHECK(count_solutions(q) == base);
      }
  }

  TEST_CASE("weighted system") {
    const std::vector<std::uint64_t> ones(8, 1);
    for (std::uint64_t m = 0; m <= 200; ++m)
      for (std::uint64_t n = 0; n <= 8; ++n) CHECK(count_N_weighted(m, n, 3, ones) == count_N_bruteforce(m, n, 3));
    CHECK(count_N_weighted(0, 0, 5, {3, 1}) == 1);
    const std::vector<std::uint64_t> w = {2, 3, 1, 4};
    for (std::uint64_t u = 1; u <= 20; ++u) {
      SystemQuery q = SystemQuery::stabilized(3 * u, 2 * u, 3);
      q.weights = w;
      if (q.r > w.size()) continue;
      SolutionPair cand{std::vector<std::uint64_t>(q.r, 0), std::vector<std::uint64_t>(q.r, 0)};
      cand.a[0] = u;
      CHECK(is_solution(q, cand));
      CHECK(count_solutions(q) >= 1);
      CHECK(count_solutions(q) == oracle::system_count(3 * u, 2 * u, 3, q.r, w));
    }
    CHECK_THROWS_AS(count_N_weighted(100, 4, 3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(count_N_weighted(5, 4, 3, {0, 1}), std::invalid_argument);
  }

  TEST_CASE("max_form_weight") {
    CHECK(max_form_weight(2, 3) == 12);
    CHECK(max_form_weight(3, 3) == 39);
    CHECK_THROWS_AS(max_form_weight(0, 3), std::invalid_argument);
  }
}
