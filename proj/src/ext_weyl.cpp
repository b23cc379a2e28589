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

#include "sl2coh/ext_weyl.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sl2coh/bounds.hpp"
#include "sl2coh/linear_systems.hpp"
#include "sl2coh/parallel.hpp"
#include "sl2coh/weyl_cohomology.hpp"

namespace sl2coh {

const char* to_string(BlockRelation b) {
  switch (b) {
    case BlockRelation::SteinbergReduce: return "SteinbergReduce";
    case BlockRelation::EvenSameBlock: return "EvenSameBlock";
    case BlockRelation::OddSameBlock: return "OddSameBlock";
    case BlockRelation::DifferentBlock: return "DifferentBlock";
    case BlockRelation::Equal: return "Equal";
  }
  return "?";
}

ExtQuery ExtQuery::make(std::int64_t n, std::uint64_t m2, std::uint64_t m1, std::uint64_t p) {
  require_odd_prime(p, "Ext between Weyl modules");
  if (m1 < m2)
    throw std::invalid_argument("Ext requires m1 >= m2 (got m1 = " + std::to_string(m1) +
                                ", m2 = " + std::to_string(m2) + ")");
  ExtQuery q;
  q.p = p;
  q.n = n;
  q.m1 = m1;
  q.m2 = m2;
  q.a = m1 / p;
  q.i = m1 % p;
  q.b = m2 / p;
  q.j = m2 % p;
  return q;
}

namespace {

BlockRelation classify(const ExtQuery& q) {
  if (q.m1 == q.m2) return BlockRelation::Equal;
  const std::uint64_t top = q.p - 1;
  if (q.i == top && q.j == top) return BlockRelation::SteinbergReduce;
  if (q.i == top || q.j == top) return BlockRelation::DifferentBlock;
  const bool even = (q.a - q.b) % 2 == 0;
  if (even && q.i == q.j) return BlockRelation::EvenSameBlock;
  if (!even && q.j == q.p - 2 - q.i) return BlockRelation::OddSameBlock;
  return BlockRelation::DifferentBlock;
}

Count H(std::int64_t n, std::int64_t m, std::uint64_t p) { return dim_weyl_cohomology(n, m, p); }

struct Key {
  std::int64_t n;
  std::uint64_t m2, m1;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = k.m1 * 0x9E3779B97F4A7C15ull;
    h ^= k.m2 + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.n) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using ExtMemo = std::unordered_map<Key, Count, KeyHash>;
thread_local std::unordered_map<std::uint64_t, ExtMemo> ext_tables;

// Sweeps touch millions of distinct pairs once each; dropping the table when
// it grows past this keeps memory flat at a small recomputation cost.
constexpr std::size_t kExtMemoCap = std::size_t{1} << 22;

Count ext_rec(ExtMemo& memo, std::int64_t n, std::uint64_t m2, std::uint64_t m1, std::uint64_t p) {
  if (n < 0) return 0;
  if (m1 == m2) return n == 0 ? 1 : 0;
  if (m2 == 0) return H(n, static_cast<std::int64_t>(m1), p);
  Key key{n, m2, m1};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const std::uint64_t a = m1 / p, i = m1 % p, b = m2 / p, j = m2 % p;
  const auto d = static_cast<std::int64_t>(a - b);
  Count v = 0;
  ExtQuery q{p, n, m1, m2, a, i, b, j};
  switch (classify(q)) {
    case BlockRelation::SteinbergReduce:
      v = ext_rec(memo, n, b, a, p);
      break;
    case BlockRelation::EvenSameBlock:
      // sum_t H^{n-1-2t}(V(a-b-2-2t)), t = 0..(a-b-2)/2
      for (std::int64_t t = 0; 2 * t <= d - 2 && n - 1 - 2 * t >= 0; ++t)
        v = checked_add(v, H(n - 1 - 2 * t, d - 2 - 2 * t, p));
      break;
    case BlockRelation::OddSameBlock:
      if (b == 0) {
        for (std::int64_t t = 0; 2 * t <= d - 1 && n - 2 * t >= 0; ++t)
          v = checked_add(v, H(n - 2 * t, d - 1 - 2 * t, p));
      } else {
        v = checked_add(ext_rec(memo, n, b, a - 1, p), ext_rec(memo, n - 1, p * b + j, p * (a - 1) + j, p));
      }
      break;
    case BlockRelation::DifferentBlock:
    case BlockRelation::Equal:
      v = 0;
      break;
  }
  if (memo.size() >= kExtMemoCap) memo.clear();
  memo.emplace(key, v);
  return v;
}

// H^k(G, V(m)) for k <= 3 from the digit classifier, H^0 from its power test.
Count H_low(unsigned k, std::int64_t m, std::uint64_t p) {
  if (m < 0 || m % 2 != 0) return 0;
  if (k == 0) {
    std::uint64_t x = static_cast<std::uint64_t>(m / 2 + 1);
    while (x % p == 0) x /= p;
    return x == 1 ? 1 : 0;
  }
  return low_degree_classifier(k, m, p);
}

}  // namespace

BlockRelation classify_block(std::uint64_t m1, std::uint64_t m2, std::uint64_t p) {
  return classify(ExtQuery::make(0, m2, m1, p));
}

Count dim_ext(std::int64_t n, std::uint64_t m2, std::uint64_t m1, std::uint64_t p) {
  ExtQuery::make(n, m2, m1, p);
  return ext_rec(ext_tables[p], n, m2, m1, p);
}

Count ext3_closed(std::uint64_t m2, std::uint64_t m1, std::uint64_t p) {
  const ExtQuery q = ExtQuery::make(3, m2, m1, p);
  if (m1 == m2) return 0;
  if (m2 == 0) return H_low(3, static_cast<std::int64_t>(m1), p);
  const auto d = static_cast<std::int64_t>(q.a - q.b);
  switch (classify(q)) {
    case BlockRelation::SteinbergReduce:
      return ext3_closed(q.b, q.a, p);
    case BlockRelation::EvenSameBlock:
      return H_low(2, d - 2, p) + H_low(0, d - 4, p);
    case BlockRelation::OddSameBlock:
      return H_low(1, d - 3, p) + ext3_closed(q.b, q.a - 1, p);
    default:
      return 0;
  }
}

Count ext3_case_lists(std::uint64_t m2, std::uint64_t m1, std::uint64_t p) {
  const ExtQuery q = ExtQuery::make(3, m2, m1, p);
  if (m1 == m2) return 0;
  const std::uint64_t d = q.a - q.b;
  switch (classify(q)) {
    case BlockRelation::SteinbergReduce:
      return ext3_case_lists(q.b, q.a, p);
    case BlockRelation::EvenSameBlock:
      return d == 4 ? 1 : count_N(static_cast<std::int64_t>(d / 2), 3, p);
    case BlockRelation::OddSameBlock: {
      std::vector<std::uint64_t> pw;
      for (std::uint64_t x = p; x < d + 10; x *= p) pw.push_back(x);
      for (auto u : pw)
        if (d == 2 * u + 3 || d == 2 * u + 1) return 1;
      for (std::size_t x = 0; x < pw.size(); ++x)
        for (std::size_t y = x + 1; y < pw.size(); ++y)
          if (d == 2 * pw[x] + 2 * pw[y] + 1) return x == 0 ? 2 : 3;
      return ext3_case_lists(q.b, q.a - 1, p);
    }
    default:
      return 0;
  }
}

Count rank_reduction_dim(std::int64_t n, std::uint64_t m_lambda, std::uint64_t m_mu, std::uint64_t p) {
  if (m_mu < m_lambda) throw std::invalid_argument("rank reduction requires m_mu >= m_lambda");
  return dim_ext(n, 2 * m_lambda, 2 * m_mu, p);
}

Count specht_dim(std::int64_t n, std::uint64_t lambda1, std::uint64_t lambda2, std::uint64_t p) {
  require_odd_prime(p, "Specht cohomology");
  if (lambda1 < lambda2) throw std::invalid_argument("Specht cohomology requires lambda1 >= lambda2");
  if (n < 0 || n > static_cast<std::int64_t>(2 * p) - 4)
    throw std::invalid_argument("Specht cohomology is computed only for 0 <= n <= 2p-4 (n = " +
                                std::to_string(n) + ", p = " + std::to_string(p) + ")");
  return dim_ext(n, 2 * (lambda1 - lambda2), 2 * (lambda1 + lambda2), p);
}

unsigned restricted_level(std::uint64_t m, std::uint64_t p) {
  unsigned r = 1;
  for (unsigned __int128 pr = p; pr <= m; pr *= p) ++r;
  return r;
}

unsigned specht_level(std::uint64_t lambda1, std::uint64_t lambda2, std::uint64_t p) {
  return restricted_level(2 * (lambda1 - lambda2), p);
}

Count fibonacci_ext_bound(unsigned n, unsigned r) {
  const Count fn = n == 0 ? 0 : fibonacci(n);
  return checked_add(fibonacci(n + 1), checked_mul(r - 1, fn));
}

void clear_ext_cache() { ext_tables.clear(); }

namespace {

ExtBoundReport sweep_shard(const ExtSweep& sw, std::uint64_t lo, std::uint64_t hi) {
  ExtBoundReport rep;
  rep.p = sw.p;
  std::vector<BoundConstant> C(sw.n_max + 3);
  for (unsigned k = 1; k < C.size(); ++k) C[k] = bound_C(k);
  C[0] = {0, 0.0, "C_0"};
  for (std::uint64_t m1 = lo; m1 < hi; m1 += sw.m1_stride) {
    for (std::uint64_t m2 = 0; m2 < sw.m2_limit && m2 <= m1; ++m2) {
      const unsigned r = restricted_level(m2, sw.p);
      const ExtQuery q = ExtQuery::make(0, m2, m1, sw.p);
      const bool even = classify(q) == BlockRelation::EvenSameBlock;
      for (unsigned n = 0; n <= sw.n_max; ++n) {
        const Count d = dim_ext(n, m2, m1, sw.p);
        ++rep.cases;
        auto& best = rep.max_dim[n];
        if (d > best) best = d;
        if (sw.fibonacci && n <= 2 * sw.p - 3) {
          const Count f = fibonacci_ext_bound(n, r);
          if (d > f) rep.violations.push_back({n, m2, m1, d, static_cast<double>(f), "F(n+1)+(r-1)F(n)"});
        }
        if (sw.exponential) {
          const BoundConstant bound = add_up(C[n + 2], scale_up(C[n], r - 1));
          if (!within(d, bound)) rep.violations.push_back({n, m2, m1, d, bound.value, "C_{n+2}+(r-1)C_n"});
        }
        if (even && static_cast<std::int64_t>(n) + 1 >= static_cast<std::int64_t>(q.a - q.b)) {
          ++rep.tail_checks;
          if (d > 1) rep.tail_anomalies.push_back({n, m2, m1, d, 1.0, "n >= a-b-1"});
        }
      }
    }
  }
  return rep;
}

}  // namespace

ExtBoundReport verify_ext_bounds(const ExtSweep& sw) {
  require_odd_prime(sw.p, "Ext bounds");
  if (sw.m1_stride == 0) throw std::invalid_argument("m1 stride must be positive");
  const std::uint64_t span = sw.m1_max + 1;
  // Shards are aligned to the stride so sampling does not depend on threads.
  const std::uint64_t chunk = ((span / 64 + 1 + sw.m1_stride - 1) / sw.m1_stride) * sw.m1_stride;
  const std::size_t shards = static_cast<std::size_t>((span + chunk - 1) / chunk);
  auto parts = run_shards<ExtBoundReport>(sw.threads, shards, [&](std::size_t s) {
    const std::uint64_t lo = s * chunk;
    return sweep_shard(sw, lo, std::min(span, lo + chunk));
  });
  ExtBoundReport total;
  total.p = sw.p;
  for (auto& part : parts) {
    total.cases += part.cases;
    total.tail_checks += part.tail_checks;
    total.violations.insert(total.violations.end(), part.violations.begin(), part.violations.end());
    total.tail_anomalies.insert(total.tail_anomalies.end(), part.tail_anomalies.begin(), part.tail_anomalies.end());
    for (auto [n, d] : part.max_dim)
      if (d > total.max_dim[n]) total.max_dim[n] = d;
  }
  return total;
}

}  // namespace sl2coh
