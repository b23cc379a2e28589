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

#include "sl2coh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "sl2coh/bounds.hpp"
#include "sl2coh/carlson.hpp"
#include "sl2coh/ext_weyl.hpp"
#include "sl2coh/linear_systems.hpp"
#include "sl2coh/padic.hpp"
#include "sl2coh/parallel.hpp"
#include "sl2coh/partitions.hpp"
#include "sl2coh/weyl_cohomology.hpp"

namespace sl2coh {

void CheckResult::merge(const CheckResult& other) {
  cases += other.cases;
  violations += other.violations;
  for (const auto& s : other.samples)
    if (samples.size() < 5) samples.push_back(s);
}

namespace {

// Small string builder: str("p=", p, " m=", m).
template <class... T>
std::string str(const T&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

CheckResult named(const std::string& check, bool informational = false) {
  CheckResult r;
  r.check = check;
  r.informational = informational;
  return r;
}

// Splits [lo, hi] into chunks, runs body(x, result) on each value, merges in order.
template <class Body>
CheckResult sharded(const std::string& check, unsigned threads, std::uint64_t lo, std::uint64_t hi, Body body) {
  CheckResult total = named(check);
  if (hi < lo) return total;
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, span / 64);
  const std::size_t shards = static_cast<std::size_t>((span + chunk - 1) / chunk);
  auto parts = run_shards<CheckResult>(threads, shards, [&](std::size_t s) {
    CheckResult part;
    const std::uint64_t a = lo + s * chunk;
    const std::uint64_t b = std::min(hi, a + chunk - 1);
    for (std::uint64_t x = a; x <= b; ++x) body(x, part);
    return part;
  });
  for (const auto& p : parts) total.merge(p);
  return total;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

bool is_power_of(std::uint64_t x, std::uint64_t p) {
  if (x == 0) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace

namespace checks {

CheckResult three_way_N(const Primes& primes, std::uint64_t m_max, std::uint64_t n_max, unsigned threads) {
  CheckResult out = named("N recursion = summed recursion = brute force");
  for (auto p : primes)
    out.merge(sharded("", threads, 0, m_max, [&](std::uint64_t m, CheckResult& r) {
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        const auto im = static_cast<std::int64_t>(m), in = static_cast<std::int64_t>(n);
        const Count rec = count_N(im, in, p), sum = count_N_sum_form(im, in, p), brute = count_N_bruteforce(m, n, p);
        r.expect(rec == sum && sum == brute,
                 [&] { return str("p=", p, " m=", m, " n=", n, ": ", rec, "/", sum, "/", brute); });
      }
    }));
  out.note = str("m<=", m_max, " n<=", n_max);
  return out;
}

CheckResult weighted_ones(const Primes& primes, std::uint64_t m_max, std::uint64_t n_max) {
  CheckResult out = named("weighted system with unit weights = plain system");
  for (auto p : primes)
    for (std::uint64_t m = 0; m <= m_max; ++m)
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        std::vector<std::uint64_t> ones(stable_length(m, p), 1);
        const Count w = count_N_weighted(m, n, p, ones), b = count_N_bruteforce(m, n, p);
        out.expect(w == b, [&] { return str("p=", p, " m=", m, " n=", n, ": ", w, " vs ", b); });
      }
  return out;
}

CheckResult closed_form(const Primes& primes, std::uint64_t m_max, unsigned threads) {
  CheckResult out = named("binomial closed form = brute force for 1<=n<=2p-2");
  for (auto p : primes)
    out.merge(sharded("", threads, 0, m_max, [&](std::uint64_t m, CheckResult& r) {
      for (std::uint64_t n = 1; n <= 2 * p - 2; ++n) {
        const Count c = closed_form_N(m, n, p), b = count_N_bruteforce(m, n, p);
        r.expect(c == b, [&] { return str("p=", p, " m=", m, " n=", n, ": closed ", c, " brute ", b); });
      }
    }));
  out.note = str("m<=", m_max);
  return out;
}

std::vector<CheckResult> count_properties(const Primes& primes, std::uint64_t m_max, std::uint64_t n_max) {
  CheckResult parity = named("N vanishes unless m = 0 or 1 mod p");
  CheckResult shift = named("N(m,n) = N(m+1,n+1) when p | m");
  CheckResult diag = named("N(m,2m/p) = 1 and N(m,n) = 0 above it when p | m");
  for (auto p : primes)
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      const auto im = static_cast<std::int64_t>(m);
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        const auto in = static_cast<std::int64_t>(n);
        if (m % p > 1) parity.expect(count_N(im, in, p) == 0, [&] { return str("p=", p, " m=", m, " n=", n); });
        if (m % p == 0) {
          shift.expect(count_N(im, in, p) == count_N(im + 1, in + 1, p),
                       [&] { return str("p=", p, " m=", m, " n=", n); });
          const std::uint64_t top = 2 * m / p;
          if (n == top) diag.expect(count_N(im, in, p) == 1, [&] { return str("p=", p, " m=", m, " n=", n); });
          if (n > top) diag.expect(count_N(im, in, p) == 0, [&] { return str("p=", p, " m=", m, " n=", n); });
        }
      }
    }
  return {parity, shift, diag};
}

CheckResult stabilization_in_r(std::uint64_t p, std::uint64_t m_max, std::uint64_t n_max) {
  CheckResult out = named("solution sets stable in r; ordered; every pair solves the system");
  for (std::uint64_t m = 0; m <= m_max; ++m)
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      SystemQuery q = SystemQuery::stabilized(m, n, p);
      const auto base = enumerate_solutions(q);
      SystemQuery longer = q;
      ++longer.r;
      const auto more = enumerate_solutions(longer);
      bool ok = base.size() == more.size();
      for (std::size_t k = 0; ok && k < base.size(); ++k) {
        ok = is_solution(q, base[k]);
        if (ok && k > 0) ok = std::tie(base[k - 1].b, base[k - 1].a) < std::tie(base[k].b, base[k].a);
      }
      out.expect(ok, [&] { return str("p=", p, " m=", m, " n=", n, ": r gives ", base.size(), ", r+1 gives ", more.size()); });
    }
  return out;
}

CheckResult monotone_injection(std::uint64_t p, std::uint64_t m_max, std::uint64_t n_max) {
  // Appending b_{r+1} = 1 adds p^r to the weight and 1 to the degree.
  CheckResult out = named("S_r(m,n) embeds in S_{r+1}(m+p^r,n+1) by appending b=1");
  for (std::uint64_t m = 0; m <= m_max; ++m)
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      SystemQuery q = SystemQuery::stabilized(m, n, p);
      SystemQuery target;
      target.m = m + ipow(p, q.r);
      target.n = n + 1;
      target.p = p;
      target.r = q.r + 1;
      const auto sols = enumerate_solutions(q);
      bool ok = sols.size() <= count_solutions(target);
      for (auto s : sols) {
        s.a.push_back(0);
        s.b.push_back(1);
        ok = ok && is_solution(target, s);
      }
      out.expect(ok, [&] { return str("p=", p, " m=", m, " n=", n); });
    }
  return out;
}

CheckResult weighted_bound(std::uint64_t p, std::uint64_t m_max, std::uint64_t n_max, std::uint64_t seed) {
  CheckResult out = named("weighted system count <= C_n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> w(1, 2 * p);
  for (std::uint64_t m = 0; m <= m_max; ++m) {
    std::vector<std::uint64_t> weights(stable_length(m, p));
    for (auto& x : weights) x = w(rng);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const Count c = count_N_weighted(m, n, p, weights);
      out.expect(within(c, bound_C(static_cast<unsigned>(n))),
                 [&] { return str("p=", p, " m=", m, " n=", n, " weights ", join(weights), ": ", c); });
    }
  }
  return out;
}

CheckResult maximal_shape(const Primes& primes, std::uint64_t m_max) {
  CheckResult out = named("p+p^2+...+p^h maximises N among weights of height h");
  for (auto p : primes)
    for (std::uint64_t n = 1; n <= 2 * p - 2; ++n) {
      std::map<unsigned, Count> best;
      for (std::uint64_t m = 1; m <= m_max; ++m) {
        const unsigned h = height(m, p);
        // ht(m) <= sum a_i + sum b_j <= n for any solution, so heights above n
        // give N = 0 on both sides; p+...+p^h would not fit in 64 bits anyway.
        if (h > n) {
          out.expect(count_N(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), p) == 0,
                     [&] { return str("p=", p, " n=", n, " m=", m, " h=", h, ": expected 0"); });
          continue;
        }
        if (!best.count(h)) best[h] = count_N(static_cast<std::int64_t>(max_form_weight(h, p)), static_cast<std::int64_t>(n), p);
        const Count v = count_N(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), p);
        out.expect(v <= best[h], [&] { return str("p=", p, " n=", n, " m=", m, " h=", h, ": ", v, " > ", best[h]); });
      }
    }
  return out;
}

CheckResult bound_constants() {
  CheckResult out = named("bound constants: rounded up and increasing");
  for (unsigned n = 1; n <= 50; ++n) {
    const auto lo = bound_C(n, 64), hi = bound_C(n, 256);
    out.expect(lo.value >= hi.value, [&] { return str("C_", n, " precision"); });
    out.expect(bound_C(n + 1).value > bound_C(n).value, [&] { return str("C_", n, " monotone"); });
    const double naive = n * std::pow(4.0, n) * std::exp(2 * M_PI * n / std::sqrt(3.0));
    out.expect(bound_C(n).value >= naive * (1 - 1e-12), [&] { return str("C_", n, " vs double evaluation"); });
  }
  return out;
}

CheckResult fibonacci_N(const Primes& primes, std::uint64_t m_max, unsigned threads) {
  CheckResult out = named("N(m,n) <= F(n) for 1<=n<=2p-2");
  for (auto p : primes) {
    // Warm the per-thread tables bottom-up so the recursion stays shallow.
    out.merge(sharded("", threads, 0, m_max, [&](std::uint64_t m, CheckResult& r) {
      for (std::uint64_t n = 1; n <= 2 * p - 2; ++n) {
        const Count v = count_N(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), p);
        r.expect(v <= fibonacci(static_cast<unsigned>(n)), [&] { return str("p=", p, " m=", m, " n=", n, ": ", v); });
      }
    }));
    clear_count_caches();
  }
  out.note = str("m<=", m_max);
  return out;
}

CheckResult fibonacci_beyond(const Primes& primes, std::uint64_t m_max) {
  CheckResult out = named("Fibonacci bound beyond 2p-2 (observation)", true);
  std::uint64_t exceed = 0;
  for (auto p : primes)
    for (std::uint64_t n = 2 * p - 1; n <= 2 * p + 2; ++n)
      for (std::uint64_t m = 0; m <= m_max; ++m) {
        ++out.cases;
        if (count_N(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), p) > fibonacci(static_cast<unsigned>(n)))
          ++exceed;
      }
  out.note = str("cases above F(n): ", exceed);
  return out;
}

CheckResult weyl_bounds(const Primes& primes, std::uint64_t n_max, std::uint64_t m_max) {
  CheckResult out = named("dim H^n(G,V(m)) <= F(n+1) (n<=2p-3) and <= C_{n+1}");
  std::string maxima;
  for (auto p : primes) {
    const auto rep = verify_weyl_bounds(p, 0, std::min<std::uint64_t>(n_max, 2 * p - 3), m_max);
    out.cases += rep.cases;
    for (const auto& v : rep.violations)
      out.expect(false, [&] { return str("p=", p, " n=", v.n, " m=", v.m, ": ", v.dim, " > ", v.bound); });
    maxima += str("p=", p, ":");
    for (auto [n, d] : rep.max_dim) maxima += str(" ", d);
    maxima += "; ";
  }
  out.note = "max by n " + maxima;
  return out;
}

CheckResult weyl_shift(const Primes& primes, std::uint64_t m_max, std::uint64_t n_max) {
  CheckResult out = named("H^n(G,V(m)) = H^{n+1}(B,-m-2)");
  for (auto p : primes)
    for (std::uint64_t m = 0; m <= m_max; m += 2)
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        const auto in = static_cast<std::int64_t>(n), im = static_cast<std::int64_t>(m);
        out.expect(dim_weyl_cohomology(in, im, p) == dim_B_cohomology(in + 1, im + 2, p),
                   [&] { return str("p=", p, " m=", m, " n=", n); });
      }
  return out;
}

CheckResult h0_law(const Primes& primes, std::uint64_t m_max) {
  CheckResult out = named("H^0(G,V(m)) = 1 iff m/2+1 is a power of p; odd m vanish");
  for (auto p : primes)
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      const Count want = m % 2 == 0 && is_power_of(m / 2 + 1, p) ? 1 : 0;
      out.expect(dim_weyl_cohomology(0, static_cast<std::int64_t>(m), p) == want,
                 [&] { return str("p=", p, " m=", m); });
      if (m % 2 == 1)
        for (std::int64_t n = 1; n <= 4; ++n)
          out.expect(dim_weyl_cohomology(n, static_cast<std::int64_t>(m), p) == 0,
                     [&] { return str("p=", p, " odd m=", m, " n=", n); });
    }
  return out;
}

CheckResult classifier(const Primes& primes, std::uint64_t m_max) {
  CheckResult out = named("digit-pattern classifier = general formula for n=1,2,3");
  for (auto p : primes)
    for (std::uint64_t m = 0; m <= m_max; m += 2)
      for (unsigned n = 1; n <= 3; ++n) {
        const Count c = low_degree_classifier(n, static_cast<std::int64_t>(m), p);
        const Count g = dim_weyl_cohomology(n, static_cast<std::int64_t>(m), p);
        out.expect(c == g, [&] { return str("p=", p, " n=", n, " m=", m, ": ", c, " vs ", g); });
      }
  return out;
}

CheckResult low_degree_spots() {
  CheckResult out = named("H^1(V(4))=1, H^2(V(22))=2, H^3(V(76))=3 at p=3");
  const std::tuple<unsigned, std::int64_t, Count> spots[] = {{1, 4, 1}, {2, 22, 2}, {3, 76, 3}};
  for (auto [n, m, want] : spots) {
    out.expect(dim_weyl_cohomology(n, m, 3) == want, [&] { return str("general n=", n, " m=", m); });
    out.expect(low_degree_classifier(n, m, 3) == want, [&] { return str("classifier n=", n, " m=", m); });
  }
  return out;
}

CheckResult exponential_instance() {
  CheckResult out = named("H^7(G,V(724)) >= 6 at p=3");
  const Count d = dim_weyl_cohomology(7, 724, 3);
  out.expect(d >= 6, [&] { return str("got ", d); });
  out.note = str("dim = ", d);
  return out;
}

std::vector<CheckResult> ext_low_degree(const Primes& primes, std::uint64_t m1_max, unsigned threads) {
  struct Part {
    CheckResult closed, cap3, low, blocks;
  };
  CheckResult closed = named("Ext^3 closed form = recursion");
  CheckResult cap3 = named("dim Ext^3 <= 3");
  CheckResult low = named("dim Ext^n <= n for n=1,2");
  CheckResult blocks = named("different blocks give 0");
  for (auto p : primes) {
    const std::uint64_t span = m1_max + 1, chunk = std::max<std::uint64_t>(1, span / 64);
    auto parts = run_shards<Part>(threads, static_cast<std::size_t>((span + chunk - 1) / chunk), [&](std::size_t s) {
      Part part;
      const std::uint64_t lo = s * chunk, hi = std::min(span, lo + chunk);
      for (std::uint64_t m1 = lo; m1 < hi; ++m1)
        for (std::uint64_t m2 = 0; m2 <= m1; ++m2) {
          const Count e3 = dim_ext(3, m2, m1, p);
          const Count c3 = ext3_closed(m2, m1, p);
          part.closed.expect(e3 == c3, [&] { return str("p=", p, " m1=", m1, " m2=", m2, ": ", e3, " vs ", c3); });
          part.cap3.expect(e3 <= 3, [&] { return str("p=", p, " m1=", m1, " m2=", m2, ": ", e3); });
          for (std::int64_t n = 1; n <= 2; ++n) {
            const Count e = dim_ext(n, m2, m1, p);
            part.low.expect(e <= static_cast<Count>(n),
                            [&] { return str("p=", p, " n=", n, " m1=", m1, " m2=", m2, ": ", e); });
          }
          if (classify_block(m1, m2, p) == BlockRelation::DifferentBlock)
            for (std::int64_t n = 0; n <= 3; ++n)
              part.blocks.expect(dim_ext(n, m2, m1, p) == 0,
                                 [&] { return str("p=", p, " n=", n, " m1=", m1, " m2=", m2); });
        }
      return part;
    });
    for (const auto& part : parts) {
      closed.merge(part.closed);
      cap3.merge(part.cap3);
      low.merge(part.low);
      blocks.merge(part.blocks);
    }
    clear_ext_cache();
  }
  closed.note = cap3.note = low.note = str("all pairs m2<=m1<=", m1_max);
  return {closed, cap3, low, blocks};
}

CheckResult ext3_case_table(const Primes& primes, std::uint64_t m1_max) {
  CheckResult out = named("Ext^3 literal case lists vs recursion (observation)", true);
  std::uint64_t differ = 0;
  std::string first;
  for (auto p : primes)
    for (std::uint64_t m1 = 0; m1 <= m1_max; ++m1)
      for (std::uint64_t m2 = 0; m2 <= m1; ++m2) {
        ++out.cases;
        if (ext3_case_lists(m2, m1, p) != dim_ext(3, m2, m1, p)) {
          if (differ++ == 0) first = str(" first at p=", p, " m1=", m1, " m2=", m2);
        }
      }
  out.note = str("pairs that differ: ", differ, first);
  return out;
}

CheckResult ext_even_terms(const Primes& primes, std::uint64_t diff_max) {
  CheckResult out = named("even block Ext^3 = H^2(V(a-b-2)) + H^0(V(a-b-4))");
  for (auto p : primes)
    for (std::uint64_t b = 0; b <= 3; ++b)
      for (std::uint64_t i = 0; i + 1 < p; ++i)
        for (std::uint64_t d = 2; d <= diff_max; d += 2) {
          const std::uint64_t m2 = p * b + i, m1 = p * (b + d) + i;
          if (m2 == 0) continue;  // answered as H^3(G,V(m1)) directly
          const auto di = static_cast<std::int64_t>(d);
          const Count want = dim_weyl_cohomology(2, di - 2, p) + dim_weyl_cohomology(0, di - 4, p);
          const Count got = dim_ext(3, m2, m1, p);
          out.expect(got == want, [&] { return str("p=", p, " m1=", m1, " m2=", m2, ": ", got, " vs ", want); });
        }
  return out;
}

CheckResult steinberg(std::uint64_t p, std::uint64_t a_max, std::int64_t n_max) {
  CheckResult out = named("Ext^n(V(pb+p-1),V(pa+p-1)) = Ext^n(V(b),V(a))");
  for (std::uint64_t a = 0; a <= a_max; ++a)
    for (std::uint64_t b = 0; b <= a; ++b)
      for (std::int64_t n = 0; n <= n_max; ++n)
        out.expect(dim_ext(n, p * b + p - 1, p * a + p - 1, p) == dim_ext(n, b, a, p),
                   [&] { return str("p=", p, " a=", a, " b=", b, " n=", n); });
  return out;
}

std::vector<CheckResult> ext_bounds(const Primes& primes, std::uint64_t m1_max, unsigned r_max, unsigned exp_n_max,
                                    std::uint64_t exp_stride, unsigned threads) {
  CheckResult fib = named("Ext^n <= F(n+1)+(r-1)F(n) for n<=2p-3, m2<p^r");
  CheckResult expo = named("Ext^n <= C_{n+2}+(r-1)C_n");
  CheckResult tail = named("even block: Ext^n <= 1 once n >= a-b-1");
  std::string maxima;
  for (auto p : primes) {
    ExtSweep sw;
    sw.p = p;
    sw.m1_max = m1_max;
    sw.m2_limit = ipow(p, r_max);
    sw.threads = threads;
    sw.n_max = static_cast<unsigned>(2 * p - 3);
    sw.exponential = false;
    auto rep = verify_ext_bounds(sw);
    fib.cases += rep.cases;
    tail.cases += rep.tail_checks;
    for (const auto& v : rep.violations)
      fib.expect(false, [&] { return str("p=", p, " n=", v.n, " m1=", v.m1, " m2=", v.m2, ": ", v.dim); });
    for (const auto& v : rep.tail_anomalies)
      tail.expect(false, [&] { return str("p=", p, " n=", v.n, " m1=", v.m1, " m2=", v.m2, ": ", v.dim); });
    maxima += str("p=", p, ":");
    for (auto [n, d] : rep.max_dim) maxima += str(" ", d);
    maxima += "; ";

    sw.n_max = exp_n_max;
    sw.fibonacci = false;
    sw.exponential = true;
    sw.m1_stride = exp_stride;
    rep = verify_ext_bounds(sw);
    expo.cases += rep.cases;
    for (const auto& v : rep.violations)
      expo.expect(false, [&] { return str("p=", p, " n=", v.n, " m1=", v.m1, " m2=", v.m2, ": ", v.dim); });
    clear_ext_cache();
  }
  fib.note = "max by n " + maxima;
  expo.note = str("m1 stride ", exp_stride, " n<=", exp_n_max);
  return {fib, expo, tail};
}

CheckResult specht(const Primes& primes, std::uint64_t lambda_max) {
  CheckResult out = named("Specht: dim <= n for n<=3 and <= F(n+1)+(r-1)F(n) for n<=2p-4");
  for (auto p : primes)
    for (std::uint64_t l1 = 0; l1 <= lambda_max; ++l1)
      for (std::uint64_t l2 = 0; l2 <= l1; ++l2) {
        const unsigned r = specht_level(l1, l2, p);
        for (std::int64_t n = 0; n <= static_cast<std::int64_t>(2 * p - 4); ++n) {
          const Count d = specht_dim(n, l1, l2, p);
          if (n >= 1 && n <= 3)
            out.expect(d <= static_cast<Count>(n), [&] { return str("p=", p, " n=", n, " lambda=(", l1, ",", l2, "): ", d); });
          out.expect(d <= fibonacci_ext_bound(static_cast<unsigned>(n), r),
                     [&] { return str("p=", p, " n=", n, " lambda=(", l1, ",", l2, ") r=", r, ": ", d); });
        }
      }
  return out;
}

std::vector<CheckResult> partitions(const Primes& primes, std::uint64_t m_max, unsigned n_max,
                                    std::uint64_t bound_m_max, unsigned bound_n_max, unsigned threads) {
  CheckResult identity = named("p_{A,n}(m) = sum over compositions c of n of |B_{A,c}(m)|");
  CheckResult bsmall = named("|B_{A,c}(m)| <= 2^n");
  std::vector<std::vector<Composition>> comps(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) comps[n] = compositions(n);
  for (auto p : primes) {
    struct Part {
      CheckResult id, bs;
    };
    const std::uint64_t span = m_max + 1, chunk = std::max<std::uint64_t>(1, span / 64);
    auto parts = run_shards<Part>(threads, static_cast<std::size_t>((span + chunk - 1) / chunk), [&](std::size_t s) {
      Part part;
      const std::uint64_t lo = s * chunk, hi = std::min(span, lo + chunk);
      for (std::uint64_t m = lo; m < hi; ++m)
        for (unsigned n = 1; n <= n_max; ++n) {
          Count total = 0;
          for (const auto& c : comps[n]) {
            const Count b = count_B_Ac(m, c, p);
            part.bs.expect(b <= (Count{1} << n), [&] { return str("p=", p, " m=", m, " n=", n, ": ", b); });
            total += b;
          }
          const Count direct = count_pAn(m, n, p, 0);
          part.id.expect(direct == total, [&] { return str("p=", p, " m=", m, " n=", n, ": ", direct, " vs ", total); });
        }
      return part;
    });
    for (const auto& part : parts) {
      identity.merge(part.id);
      bsmall.merge(part.bs);
    }
  }

  CheckResult pan = named("p_{A,n}(m) < e^{2 pi n/sqrt 3} 2^n");
  for (auto p : primes)
    for (unsigned n = 1; n <= bound_n_max; ++n) {
      const auto bound = power_partition_bound(n);
      Count best = 0;
      for (std::uint64_t m = 0; m <= bound_m_max; ++m) best = std::max(best, count_pAn(m, n, p, 0));
      ++pan.cases;
      pan.expect(strictly_below(best, bound), [&] { return str("p=", p, " n=", n, ": max ", best); });
    }

  CheckResult hr = named("p(n) < e^{pi sqrt(2n/3)} for 1<=n<=200");
  for (unsigned n = 1; n <= 200; ++n)
    hr.expect(strictly_below(partition_count(n), hardy_ramanujan_bound(n)), [&] { return str("n=", n); });

  CheckResult ordered = named("compositions: 2^{n-1} of them and at most p(2n^2)");
  for (unsigned n = 1; n <= 12; ++n) {
    const Count c = compositions_count(n);
    ordered.expect(c == (Count{1} << (n - 1)) && compositions(n).size() == c, [&] { return str("n=", n, " count"); });
    ordered.expect(c <= partition_count(2 * n * n), [&] { return str("n=", n, " vs p(2n^2)"); });
  }

  CheckResult pent = named("p(n) satisfies the pentagonal recurrence");
  for (unsigned n = 1; n <= 300; ++n) {
    // p(n) = sum_{k>=1} (-1)^{k+1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))
    __int128 acc = 0;
    for (unsigned k = 1;; ++k) {
      const unsigned g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = k % 2 ? 1 : -1;
      acc += sign * static_cast<__int128>(partition_count(n - g1));
      if (g2 <= n) acc += sign * static_cast<__int128>(partition_count(n - g2));
    }
    pent.expect(acc == static_cast<__int128>(partition_count(n)), [&] { return str("n=", n); });
  }
  return {identity, bsmall, pan, hr, ordered, pent};
}

std::vector<CheckResult> p2(std::uint64_t m_max, std::uint64_t n_max) {
  CheckResult agree = named("p=2: dim H^n(G,V(m)) = brute force of sum a_i = n+1, sum 2^i a_i = m+2");
  CheckResult bound = named("p=2: dim H^n(G,V(m)) <= e^{2 pi (n+1)/sqrt 3} 2^{n+1}");
  CheckResult shifted = named("p=2: system with right side m+1 = p_{A,n+1}(m+1), equal to the value at m-1");
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const auto b = power_partition_bound(static_cast<unsigned>(n + 1));
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      const Count d = dim_weyl_cohomology(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m), 2);
      const Count want = m % 2 == 0 ? count_p2_system_bruteforce(m + 2, n + 1) : 0;
      agree.expect(d == want, [&] { return str("n=", n, " m=", m, ": ", d, " vs ", want); });
      if (n >= 1) bound.expect(within(d, b), [&] { return str("n=", n, " m=", m, ": ", d); });
      const Count lit = count_p2_system_bruteforce(m + 1, n + 1);
      bool ok = lit == count_pAn(m + 1, static_cast<unsigned>(n + 1), 2, 1);
      if (m % 2 == 1)
        ok = ok && lit == dim_weyl_cohomology(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m - 1), 2);
      else
        ok = ok && lit == 0;
      shifted.expect(ok, [&] { return str("n=", n, " m=", m); });
    }
  }
  return {agree, bound, shifted};
}

std::vector<CheckResult> finite(const Primes& primes, std::size_t s_full_max, std::size_t s_sampled,
                                std::uint64_t samples, unsigned n_max, unsigned threads) {
  CheckResult agree = named("finite groups: two enumerators agree");
  CheckResult bound = named("finite groups: (2n+2max d+7) C_n prod(min(d_i,f_i)+1) and (2n+7) C_n");
  CheckResult window = named("finite groups: multiplier t within [-3, 2n+2max d+3]");
  CheckResult hom = named("finite groups: dim Hom(L,L) above 1 (observation)", true);
  std::string tr;
  auto absorb = [&](const FiniteReport& rep) {
    agree.cases += rep.cases;
    bound.cases += rep.cases;
    window.cases += rep.solutions;
    hom.cases += rep.cases;
    for (const auto& v : rep.violations) {
      auto describe = [&] {
        std::string d, f;
        for (auto w : v.d.weights) d += std::to_string(w);
        for (auto w : v.f.weights) f += std::to_string(w);
        return str("p=", rep.p, " s=", rep.s, " n=", v.n, " d=", d, " f=", f, ": ", v.dim, " (", v.which, ")");
      };
      if (v.which == "enumerators disagree") {
        ++agree.violations;
        if (agree.samples.size() < 5) agree.samples.push_back(describe());
      } else {
        ++bound.violations;
        if (bound.samples.size() < 5) bound.samples.push_back(describe());
      }
    }
    window.violations += rep.t_outside;
    hom.note += str("p=", rep.p, " s=", rep.s, ": ", rep.hom_above_one, "; ");
    tr += str("p=", rep.p, " s=", rep.s, ": t in ", rep.t_min, "..", rep.t_max, "; ");
  };
  for (auto p : primes) {
    for (std::size_t s = 1; s <= s_full_max; ++s) {
      FiniteSweep sw{p, s, n_max, 0, 1, threads};
      absorb(verify_finite_bound(sw));
    }
    if (s_sampled > 0) {
      FiniteSweep sw{p, s_sampled, n_max, samples, 7, threads};
      absorb(verify_finite_bound(sw));
    }
  }
  window.note = tr;
  return {agree, bound, window, hom};
}

CheckResult stabilization_probe(std::uint64_t p, std::uint64_t m_max, unsigned n_max, std::size_t s_min,
                                std::size_t s_max) {
  CheckResult out = named("stabilization probe emits identical tables on repeat");
  std::uint64_t flagged = 0;
  for (unsigned n = 0; n <= n_max; ++n)
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      const auto first = generic_stabilization_probe(n, m, p, s_min, s_max);
      const auto again = generic_stabilization_probe(n, m, p, s_min, s_max);
      bool same = first.rows.size() == again.rows.size() && first.rows.size() == s_max - s_min + 1 &&
                  first.stable_from == again.stable_from && first.tail_constant == again.tail_constant;
      for (std::size_t k = 0; same && k < first.rows.size(); ++k)
        same = first.rows[k].s == again.rows[k].s && first.rows[k].dim == again.rows[k].dim;
      out.expect(same, [&] { return str("n=", n, " m=", m); });
      if (first.tail_constant) ++flagged;
    }
  out.note = str("tail constant in ", flagged, " of ", out.cases, " tables");
  return out;
}

}  // namespace checks

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oracle",     "closed-form", "properties",       "fibonacci",
                                                 "low-degree", "ext3",        "ext-bounds",       "partition-bounds",
                                                 "p2",         "finite-bounds", "stabilization"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, Scale scale, unsigned threads) {
  using namespace checks;
  const bool full = scale == Scale::full;
  std::vector<CheckResult> out;
  auto add = [&](CheckResult r) { out.push_back(std::move(r)); };
  auto add_all = [&](std::vector<CheckResult> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };

  if (suite == "oracle") {
    add(full ? three_way_N({3, 5, 7}, 2000, 10, threads) : three_way_N({3, 5}, 500, 8, threads));
    add(weighted_ones({3, 5}, full ? 500 : 150, 8));
  } else if (suite == "closed-form") {
    add(closed_form({3, 5}, full ? 5000 : 1000, threads));
  } else if (suite == "properties") {
    add_all(full ? count_properties({3, 5, 7}, 2000, 10) : count_properties({3, 5}, 500, 8));
    add(stabilization_in_r(3, full ? 300 : 100, 8));
    add(monotone_injection(3, full ? 500 : 150, 8));
    add(weighted_bound(3, full ? 400 : 120, 8, 11));
    add(maximal_shape(full ? Primes{3, 5, 7} : Primes{3}, full ? 3000 : 1000));
    add(weyl_shift({3, 5}, full ? 5000 : 1000, 8));
    add(h0_law({3, 5}, full ? 5000 : 1000));
    add(bound_constants());
  } else if (suite == "fibonacci") {
    add(full ? fibonacci_N({3, 5, 7}, 100000, threads) : fibonacci_N({3}, 10000, threads));
    add(weyl_bounds(full ? Primes{3, 5, 7} : Primes{3}, 3, full ? 100000 : 10000));
    add(fibonacci_beyond({3}, full ? 20000 : 3000));
  } else if (suite == "low-degree") {
    add(classifier({3, 5}, full ? 10000 : 2000));
    add(low_degree_spots());
    add(exponential_instance());
  } else if (suite == "ext3") {
    add_all(full ? ext_low_degree({3, 5}, 3000, threads) : ext_low_degree({3}, 1000, threads));
    add(ext3_case_table({3}, full ? 1000 : 300));
    add(ext_even_terms({3, 5}, 200));
    add(steinberg(3, full ? 300 : 60, 4));
  } else if (suite == "ext-bounds") {
    add_all(full ? ext_bounds({3, 5}, 10000, 3, 8, 13, threads) : ext_bounds({3}, 2000, 3, 6, 17, threads));
    add(specht(full ? Primes{5, 7} : Primes{5}, full ? 200 : 60));
  } else if (suite == "partition-bounds") {
    add_all(full ? partitions({2, 3}, 10000, 8, 100000, 15, threads) : partitions({2, 3}, 2000, 6, 10000, 12, threads));
  } else if (suite == "p2") {
    add_all(full ? p2(4096, 12) : p2(1024, 8));
  } else if (suite == "finite-bounds") {
    add_all(full ? finite({3, 5}, 2, 3, 1500, 6, threads) : finite({3}, 2, 0, 0, 4, threads));
  } else if (suite == "stabilization") {
    add(stabilization_probe(3, 8, 4, 2, full ? 5 : 4));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  for (auto& r : out) r.suite = suite;
  return out;
}

}  // namespace sl2coh
