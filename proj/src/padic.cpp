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

#include "sl2coh/padic.hpp"

#include <stdexcept>
#include <string>

namespace sl2coh {

Count checked_add(Count x, Count y) {
  Count r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("count addition overflows 64 bits");
  return r;
}

Count checked_mul(Count x, Count y) {
  Count r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("count multiplication overflows 64 bits");
  return r;
}

std::uint64_t ipow(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, p);
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

void require_odd_prime(std::uint64_t p, const char* what) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument(std::string(what) + " requires an odd prime p");
}

PAdicExpansion::PAdicExpansion(std::uint64_t m, std::uint64_t p) : m_(m), p_(p) {
  require_prime(p);
  if (m == 0) {
    digits_.push_back(0);
    return;
  }
  for (std::uint64_t x = m; x != 0; x /= p) digits_.push_back(static_cast<unsigned>(x % p));
}

unsigned PAdicExpansion::height() const {
  unsigned h = 0;
  for (unsigned c : digits_) h += c;
  return h;
}

unsigned PAdicExpansion::interior_zeros() const {
  unsigned z = 0;
  for (std::size_t i = 1; i < digits_.size(); ++i)
    if (digits_[i] == 0) ++z;
  return z;
}

std::uint64_t PAdicExpansion::reassemble() const {
  std::uint64_t r = 0;
  for (std::size_t i = digits_.size(); i-- > 0;) r = checked_add(checked_mul(r, p_), digits_[i]);
  return r;
}

PAdicExpansion expand(std::uint64_t m, std::uint64_t p) { return PAdicExpansion(m, p); }

unsigned height(std::uint64_t m, std::uint64_t p) { return expand(m, p).height(); }

std::pair<unsigned, unsigned> r_s_stats(std::uint64_t m, std::uint64_t p) {
  if (m == 0) throw std::invalid_argument("r_m is undefined for m = 0");
  auto e = expand(m, p);
  return {e.top_index(), e.interior_zeros()};
}

Count fibonacci(unsigned n) {
  if (n == 0) throw std::invalid_argument("fibonacci is indexed from 1");
  Count prev = 0, cur = 1;
  for (unsigned i = 1; i < n; ++i) {
    Count next = checked_add(prev, cur);
    prev = cur;
    cur = next;
  }
  return cur;
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; each partial product r * (n - k + i) / i is exact.
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<Count>(r);
}

}  // namespace sl2coh
