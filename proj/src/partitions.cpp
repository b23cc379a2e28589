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

#include "sl2coh/partitions.hpp"

#include <stdexcept>
#include <unordered_map>

namespace sl2coh {

unsigned Composition::total() const {
  unsigned t = 0;
  for (unsigned c : parts) t += c;
  return t;
}

Count partition_count(unsigned n) {
  std::vector<Count> dp(n + 1, 0);
  dp[0] = 1;
  for (unsigned part = 1; part <= n; ++part)
    for (unsigned j = part; j <= n; ++j) dp[j] = checked_add(dp[j], dp[j - part]);
  return dp[n];
}

Count compositions_count(unsigned n) {
  if (n == 0) throw std::invalid_argument("compositions are counted for n >= 1");
  // c(k) = sum over the first part f of c(k - f), c(0) = 1.
  std::vector<Count> c(n + 1, 0);
  c[0] = 1;
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned f = 1; f <= k; ++f) c[k] = checked_add(c[k], c[k - f]);
  return c[n];
}

CompositionGenerator::CompositionGenerator(unsigned n) : n_(n) {
  if (n == 0) throw std::invalid_argument("compositions are generated for n >= 1");
}

std::optional<Composition> CompositionGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    current_.assign(n_, 1u);
    return Composition{current_};
  }
  if (current_.size() == 1) {
    done_ = true;
    return std::nullopt;
  }
  // Successor: drop the last part x, bump the one before it, refill x-1 ones.
  unsigned last = current_.back();
  current_.pop_back();
  ++current_.back();
  current_.insert(current_.end(), last - 1, 1u);
  return Composition{current_};
}

std::vector<Composition> compositions(unsigned n) {
  std::vector<Composition> out;
  CompositionGenerator gen(n);
  while (auto c = gen.next()) out.push_back(std::move(*c));
  return out;
}

namespace {

struct Key {
  std::uint64_t q;
  unsigned k;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    return static_cast<std::size_t>(key.q * 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(key.k) << 1));
  }
};

using PowerMemo = std::unordered_map<Key, Count, KeyHash>;
thread_local std::unordered_map<std::uint64_t, PowerMemo> power_tables;

// Multisets of k powers p^e (e >= 0) summing to q. The multiplicity c of p^0
// must satisfy c = q (mod p) so that the rest is divisible by p.
Count powers_from_one(PowerMemo& memo, std::uint64_t q, unsigned k, std::uint64_t p) {
  if (k == 0) return q == 0 ? 1 : 0;
  if (q < k) return 0;
  Key key{q, k};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Count total = 0;
  for (std::uint64_t c = q % p; c <= k && c <= q; c += p)
    total = checked_add(total, powers_from_one(memo, (q - c) / p, k - static_cast<unsigned>(c), p));
  memo.emplace(key, total);
  return total;
}

Count exponent_vectors(std::uint64_t rem, const std::vector<unsigned>& parts, std::size_t i, unsigned min_exp,
                       std::uint64_t p) {
  if (i == parts.size()) return rem == 0 ? 1 : 0;
  Count total = 0;
  unsigned __int128 pw = ipow(p, min_exp);
  for (unsigned s = min_exp; static_cast<unsigned __int128>(parts[i]) * pw <= rem; ++s, pw *= p) {
    std::uint64_t used = static_cast<std::uint64_t>(parts[i] * pw);
    total = checked_add(total, exponent_vectors(rem - used, parts, i + 1, s + 1, p));
  }
  return total;
}

}  // namespace

Count count_pAn(std::uint64_t m, unsigned n, std::uint64_t p, unsigned min_exp) {
  require_prime(p);
  if (n == 0) throw std::invalid_argument("count_pAn needs n >= 1");
  // Every part is a multiple of p^{min_exp}.
  std::uint64_t q = m;
  for (unsigned e = 0; e < min_exp; ++e) {
    if (q % p != 0) return 0;
    q /= p;
  }
  return powers_from_one(power_tables[p], q, n, p);
}

Count count_B_Ac(std::uint64_t m, const Composition& c, std::uint64_t p) {
  require_prime(p);
  if (c.parts.empty()) throw std::invalid_argument("composition must have at least one part");
  for (unsigned part : c.parts)
    if (part == 0) throw std::invalid_argument("composition parts must be positive");
  if (m == 0) return 0;
  return exponent_vectors(m, c.parts, 0, 0, p);
}

}  // namespace sl2coh
