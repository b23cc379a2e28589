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

#include "sl2coh/linear_systems.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sl2coh {

SystemQuery SystemQuery::stabilized(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  SystemQuery q;
  q.m = m;
  q.n = n;
  q.p = p;
  q.r = stable_length(m, p);
  return q;
}

void SystemQuery::validate() const {
  require_prime(p);
  if (r == 0) throw std::invalid_argument("system length r must be at least 1");
  if (!weights.empty()) {
    if (weights.size() < r)
      throw std::invalid_argument("weighted system needs " + std::to_string(r) + " weights, got " +
                                  std::to_string(weights.size()));
    for (unsigned i = 0; i < r; ++i)
      if (weights[i] == 0) throw std::invalid_argument("weights must be positive");
  }
}

unsigned stable_length(std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  unsigned r = 1;
  for (unsigned __int128 pr = p; pr <= m; pr *= p) ++r;
  return r;
}

bool is_solution(const SystemQuery& q, const SolutionPair& s) {
  if (s.a.size() != q.r || s.b.size() != q.r) return false;
  unsigned __int128 eq1 = 0, eq2 = 0, pw = 1;
  for (unsigned i = 0; i < q.r; ++i) {
    if (s.b[i] != 0 && s.b[i] != q.weight(i)) return false;
    eq1 += 2 * static_cast<unsigned __int128>(s.a[i]) + s.b[i];
  }
  // eq2 = b_1 + sum_{i=1}^{r} (a_i + b_{i+1}) p^i with b_{r+1} = 0.
  eq2 = s.b[0];
  for (unsigned i = 0; i < q.r; ++i) {
    pw *= q.p;
    unsigned __int128 coeff = s.a[i] + (i + 1 < q.r ? s.b[i + 1] : 0);
    eq2 += coeff * pw;
  }
  return eq1 == q.n && eq2 == q.m;
}

namespace {

// Depth-first search over a_1..a_r for a fixed b. At level i the p^i
// coefficient a_i + b_{i+1} must match the remaining quotient mod p, so each
// level walks one residue class and the a-budget prunes the rest.
template <class Visit>
class SolutionSearch {
public:
  SolutionSearch(const SystemQuery& q, Visit& visit) : q_(q), visit_(visit), a_(q.r, 0), b_(q.r, 0) {}

  void run() { choose_b(0, 0); }

private:
  void choose_b(unsigned i, std::uint64_t b_sum) {
    if (b_sum > q_.n) return;
    if (i == q_.r) {
      std::uint64_t rest = q_.n - b_sum;
      if (rest % 2 != 0) return;
      if (b_[0] > q_.m || (q_.m - b_[0]) % q_.p != 0) return;
      descend(0, (q_.m - b_[0]) / q_.p, rest / 2);
      return;
    }
    b_[i] = 0;
    choose_b(i + 1, b_sum);
    b_[i] = q_.weight(i);
    choose_b(i + 1, b_sum + b_[i]);
    b_[i] = 0;
  }

  // quotient = remaining value divided by p^{i+1}; budget = remaining sum of a.
  void descend(unsigned i, std::uint64_t quotient, std::uint64_t budget) {
    if (i + 1 == q_.r) {
      if (quotient == budget) {
        a_[i] = quotient;
        visit_(a_, b_);
        a_[i] = 0;
      }
      return;
    }
    const std::uint64_t next_b = b_[i + 1];
    if (quotient < next_b) return;
    const std::uint64_t p = q_.p;
    // a_i = x - next_b with x = quotient (mod p) and next_b <= x <= quotient.
    std::uint64_t x = quotient % p;
    if (x < next_b) x += ((next_b - x + p - 1) / p) * p;
    for (; x <= quotient; x += p) {
      std::uint64_t ai = x - next_b;
      if (ai > budget) break;
      a_[i] = ai;
      descend(i + 1, (quotient - x) / p, budget - ai);
    }
    a_[i] = 0;
  }

  const SystemQuery& q_;
  Visit& visit_;
  std::vector<std::uint64_t> a_;
  std::vector<std::uint64_t> b_;
};

template <class Visit>
void search(const SystemQuery& q, Visit& visit) {
  q.validate();
  SolutionSearch<Visit>(q, visit).run();
}

struct PairHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.first) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(k.second) + 0x7F4A7C15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using Memo = std::unordered_map<std::pair<std::int64_t, std::int64_t>, Count, PairHash>;

// One table per prime, per thread.
Memo& memo_for(std::unordered_map<std::uint64_t, Memo>& tables, std::uint64_t p) { return tables[p]; }

thread_local std::unordered_map<std::uint64_t, Memo> recursion_tables;
thread_local std::unordered_map<std::uint64_t, Memo> sum_form_tables;

Count base_case(std::int64_t m, std::int64_t n) {
  if (m == 0) return n == 0 ? 1 : 0;
  return n == 1 ? 1 : 0;  // m == 1
}

Count recursion(Memo& memo, std::int64_t m, std::int64_t n, std::int64_t p) {
  if (m < 0 || n < 0) return 0;
  if (m <= 1) return base_case(m, n);
  const std::int64_t residue = m % p;
  if (residue > 1) return 0;
  auto key = std::make_pair(m, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Count v = recursion(memo, m - p, n - 2, p);
  v = checked_add(v, residue == 0 ? recursion(memo, m / p, n, p) : recursion(memo, (m - 1) / p, n - 1, p));
  memo.emplace(key, v);
  return v;
}

Count sum_form(Memo& memo, std::int64_t m, std::int64_t n, std::int64_t p) {
  if (m < 0 || n < 0) return 0;
  if (m <= 1) return base_case(m, n);
  const std::int64_t residue = m % p;
  if (residue > 1) return 0;
  auto key = std::make_pair(m, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::int64_t u = (m - residue) / p;
  Count v = 0;
  for (std::int64_t a = 0; 2 * a <= n - residue && a <= u; ++a)
    v = checked_add(v, sum_form(memo, u - a, n - 2 * a - residue, p));
  memo.emplace(key, v);
  return v;
}

}  // namespace

std::vector<SolutionPair> enumerate_solutions(const SystemQuery& q) {
  std::vector<SolutionPair> out;
  auto collect = [&out](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    out.push_back(SolutionPair{a, b});
  };
  search(q, collect);
  return out;
}

Count count_solutions(const SystemQuery& q) {
  Count c = 0;
  auto tally = [&c](const std::vector<std::uint64_t>&, const std::vector<std::uint64_t>&) { c = checked_add(c, 1); };
  search(q, tally);
  return c;
}

Count count_N_bruteforce(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  return count_solutions(SystemQuery::stabilized(m, n, p));
}

Count count_N(std::int64_t m, std::int64_t n, std::uint64_t p) {
  require_odd_prime(p, "the N(m,n) recursion");
  return recursion(memo_for(recursion_tables, p), m, n, static_cast<std::int64_t>(p));
}

Count count_N_sum_form(std::int64_t m, std::int64_t n, std::uint64_t p) {
  require_odd_prime(p, "the summed N(m,n) recursion");
  return sum_form(memo_for(sum_form_tables, p), m, n, static_cast<std::int64_t>(p));
}

Count closed_form_N(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  require_odd_prime(p, "the closed form");
  if (n < 1 || n > 2 * p - 2)
    throw std::invalid_argument("closed form requires 1 <= n <= 2p-2 (n = " + std::to_string(n) +
                                ", p = " + std::to_string(p) + ")");
  if (m == 0) return 0;
  const auto e = expand(m, p);
  const unsigned c0 = e.digit(0);
  // b_1 must equal c_0, which forces c_0 in {0, 1}.
  if (c0 > 1) return 0;
  const std::int64_t free_slots = static_cast<std::int64_t>(e.top_index()) - e.interior_zeros();
  const std::int64_t ones = 2 * static_cast<std::int64_t>(e.height()) - c0 - static_cast<std::int64_t>(n);
  return binomial(free_slots, ones);
}

Count count_N_weighted(std::uint64_t m, std::uint64_t n, std::uint64_t p,
                       const std::vector<std::uint64_t>& weights) {
  SystemQuery q = SystemQuery::stabilized(m, n, p);
  q.weights = weights;
  return count_solutions(q);
}

std::uint64_t max_form_weight(unsigned h, std::uint64_t p) {
  require_prime(p);
  if (h == 0) throw std::invalid_argument("max_form_weight needs h >= 1");
  std::uint64_t s = 0;
  for (unsigned j = 1; j <= h; ++j) s = checked_add(s, ipow(p, j));
  return s;
}

void clear_count_caches() {
  recursion_tables.clear();
  sum_form_tables.clear();
}

}  // namespace sl2coh
