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

#include <tuple>

#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "sl2coh/ext_weyl.hpp"
#include "sl2coh/weyl_cohomology.hpp"

using namespace sl2coh;

namespace {

struct Fixture {
  std::uint64_t p;
  std::int64_t n;
  std::uint64_t m2, m1;
  Count dim;
};

// Non-zero values computed independently from the block recursion.
constexpr Fixture kFixtures[] = {
    {3, 0, 1, 51, 1},  {3, 0, 16, 18, 1}, {3, 0, 16, 36, 1}, {3, 0, 24, 28, 1}, {3, 1, 1, 7, 1},
    {3, 1, 1, 21, 1},  {3, 1, 2, 14, 1},  {3, 1, 4, 10, 1},  {3, 1, 27, 43, 1}, {3, 1, 31, 39, 1},
    {3, 1, 34, 36, 1}, {3, 1, 40, 48, 1}, {3, 1, 52, 58, 1}, {3, 2, 21, 39, 1}, {3, 2, 21, 45, 1},
    {3, 2, 30, 58, 1}, {3, 3, 3, 25, 1},  {3, 3, 12, 52, 1}, {3, 3, 15, 37, 1}, {3, 3, 27, 51, 2},
    {3, 3, 37, 57, 1}, {3, 4, 7, 33, 2},  {3, 4, 12, 40, 2}, {3, 4, 12, 42, 1}, {3, 4, 15, 43, 2},
    {3, 4, 19, 45, 2}, {3, 5, 1, 45, 1},  {3, 5, 5, 59, 1},  {3, 5, 6, 34, 1},  {3, 5, 9, 43, 1},
    {3, 5, 12, 40, 1}, {3, 5, 12, 54, 2}, {3, 5, 16, 48, 1}, {3, 5, 22, 48, 1}, {5, 0, 4, 44, 1},
    {5, 0, 7, 11, 1},  {5, 0, 50, 58, 1}, {5, 2, 5, 23, 1},  {5, 5, 7, 37, 1},  {5, 5, 13, 43, 1},
};

}  // namespace

TEST_SUITE("ext") {
  TEST_CASE("fixtures") {
    for (const auto& f : kFixtures) {
      CAPTURE(f.p);
      CAPTURE(f.n);
      CAPTURE(f.m2);
      CAPTURE(f.m1);
      CHECK(dim_ext(f.n, f.m2, f.m1, f.p) == f.dim);
    }
    CHECK(dim_ext(3, 1, 219, 3) == 3);
    CHECK(dim_ext(5, 40, 700, 3) == 1);
    CHECK(dim_ext(6, 10, 1234, 5) == 0);
  }

  TEST_CASE("aggregate over small weights") {
    for (auto [p, want] : {std::pair<std::uint64_t, Count>{3, 983}, {5, 381}}) {
      Count total = 0;
      for (std::int64_t n = 0; n <= 5; ++n)
        for (std::uint64_t m1 = 0; m1 < 60; ++m1)
          for (std::uint64_t m2 = 0; m2 <= m1; ++m2) total += dim_ext(n, m2, m1, p);
      CHECK(total == want);
    }
  }

  TEST_CASE("zero source weight is cohomology") {
    for (std::uint64_t p : {3, 5})
      for (std::uint64_t m = 0; m <= 300; ++m)
        for (std::int64_t n = 0; n <= 6; ++n)
          CHECK(dim_ext(n, 0, m, p) == dim_weyl_cohomology(n, static_cast<std::int64_t>(m), p));
  }

  TEST_CASE("Hom and diagonal") {
    for (std::uint64_t m = 0; m <= 200; ++m) {
      CHECK(dim_ext(0, m, m, 3) == 1);
      for (std::int64_t n = 1; n <= 4; ++n) CHECK(dim_ext(n, m, m, 3) == 0);
    }
    CHECK(dim_ext(-1, 3, 9, 3) == 0);
  }

  TEST_CASE("Steinberg reduction") {
    for (std::uint64_t p : {3, 5})
      for (std::uint64_t m1 = 0; m1 <= 60; ++m1)
        for (std::uint64_t m2 = 0; m2 <= m1; ++m2)
          for (std::int64_t n = 0; n <= 5; ++n)
            CHECK(dim_ext(n, p * m2 + p - 1, p * m1 + p - 1, p) == dim_ext(n, m2, m1, p));
  }

  TEST_CASE("block classification") {
    CHECK(classify_block(8, 8, 3) == BlockRelation::Equal);
    CHECK(classify_block(8, 5, 3) == BlockRelation::SteinbergReduce);
    CHECK(classify_block(8, 4, 3) == BlockRelation::DifferentBlock);
    CHECK(classify_block(7, 1, 3) == BlockRelation::EvenSameBlock);
    CHECK(classify_block(4, 0, 3) == BlockRelation::OddSameBlock);
    for (std::uint64_t m1 = 0; m1 <= 200; ++m1)
      for (std::uint64_t m2 = 0; m2 < m1; ++m2)
        if (classify_block(m1, m2, 5) == BlockRelation::DifferentBlock)
          for (std::int64_t n = 0; n <= 4; ++n) CHECK(dim_ext(n, m2, m1, 5) == 0);
    CHECK_THROWS_AS(ExtQuery::make(1, 5, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(ExtQuery::make(1, 0, 3, 2), std::invalid_argument);
    const auto q = ExtQuery::make(2, 4, 17, 5);
    CHECK(std::tie(q.a, q.i, q.b, q.j) == std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>{3, 2, 0, 4});
  }

  TEST_CASE("degree three closed form") {
    for (std::uint64_t p : {3, 5, 7})
      for (std::uint64_t m1 = 0; m1 <= 400; ++m1)
        for (std::uint64_t m2 = 0; m2 <= m1; ++m2) {
          CAPTURE(p);
          CAPTURE(m1);
          CAPTURE(m2);
          CHECK(ext3_closed(m2, m1, p) == dim_ext(3, m2, m1, p));
        }
  }

  TEST_CASE("Specht modules") {
    for (std::uint64_t p : {5, 7})
      for (std::uint64_t l1 = 0; l1 <= 30; ++l1)
        for (std::uint64_t l2 = 0; l2 <= l1; ++l2)
          for (std::int64_t n = 0; n <= static_cast<std::int64_t>(2 * p - 4); ++n)
            CHECK(specht_dim(n, l1, l2, p) == dim_ext(n, 2 * (l1 - l2), 2 * (l1 + l2), p));
    CHECK(specht_dim(2, 3, 1, 5) == 0);
    CHECK(specht_dim(3, 10, 4, 5) == 0);
    CHECK(specht_dim(1, 7, 7, 5) == 0);
    CHECK_THROWS_AS(specht_dim(7, 3, 1, 5), std::invalid_argument);
    CHECK(specht_level(1, 1, 5) == 1);
    CHECK(specht_level(13, 1, 5) == 2);
    CHECK(restricted_level(24, 5) == 2);
    CHECK(restricted_level(25, 5) == 3);
  }

  TEST_CASE("bound shapes") {
    CHECK(fibonacci_ext_bound(0, 1) == 1);
    CHECK(fibonacci_ext_bound(0, 4) == 1);
    CHECK(fibonacci_ext_bound(3, 1) == 3);
    CHECK(fibonacci_ext_bound(3, 3) == 3 + 2 * 2);
  }

  TEST_CASE("bound sweep is clean and deterministic") {
    ExtSweep sw;
    sw.p = 3;
    sw.n_max = 4;
    sw.m1_max = 400;
    sw.m2_limit = 27;
    const auto one = verify_ext_bounds(sw);
    sw.threads = 4;
    clear_ext_cache();
    const auto four = verify_ext_bounds(sw);
    CHECK(one.violations.empty());
    CHECK(one.tail_anomalies.empty());
    CHECK(one.cases == four.cases);
    CHECK(one.max_dim == four.max_dim);
  }
}
