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

#include "sl2coh/carlson.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sl2coh/bounds.hpp"
#include "sl2coh/parallel.hpp"

namespace sl2coh {

unsigned SimpleLabel::max_weight() const {
  unsigned m = 0;
  for (unsigned w : weights) m = std::max(m, w);
  return m;
}

void SimpleLabel::validate() const {
  require_odd_prime(p, "SL2(p^s) simple modules");
  if (weights.empty()) throw std::invalid_argument("a simple label needs s >= 1 weights");
  for (unsigned w : weights)
    if (w >= p) throw std::invalid_argument("label weights must be p-restricted (0 <= w <= p-1)");
}

SimpleLabel SimpleLabel::zero(std::uint64_t p, std::size_t s) { return SimpleLabel{p, std::vector<unsigned>(s, 0)}; }

SimpleLabel SimpleLabel::of_integer(std::uint64_t m, std::uint64_t p, std::size_t s) {
  SimpleLabel out{p, {}};
  for (std::size_t i = 0; i < s; ++i) {
    out.weights.push_back(static_cast<unsigned>(m % p));
    m /= p;
  }
  if (m != 0) throw std::invalid_argument("weight does not fit in s base-p digits");
  out.validate();
  return out;
}

SimpleLabel SimpleLabel::parse(const std::string& text, std::uint64_t p) {
  SimpleLabel out{p, {}};
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad label entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad label entry '" + item + "'");
    out.weights.push_back(static_cast<unsigned>(v));
  }
  out.validate();
  return out;
}

namespace {

struct Setup {
  std::uint64_t p;
  std::size_t s;
  std::int64_t modulus;             // p^s - 1
  std::vector<std::int64_t> place;  // p^{i-1}
  std::vector<bool> blocked;        // d_i or f_i equals p-1
};

Setup prepare(const SimpleLabel& d, const SimpleLabel& f) {
  d.validate();
  f.validate();
  if (d.p != f.p || d.s() != f.s()) throw std::invalid_argument("labels must share p and s");
  Setup st{d.p, d.s(), 0, {}, {}};
  std::int64_t pw = 1;
  for (std::size_t i = 0; i < st.s; ++i) {
    st.place.push_back(pw);
    pw = static_cast<std::int64_t>(checked_mul(static_cast<Count>(pw), d.p));
    st.blocked.push_back(d.weights[i] == d.p - 1 || f.weights[i] == f.p - 1);
  }
  st.modulus = pw - 1;
  return st;
}

std::pair<int, int> k_window(unsigned a, unsigned b, int d, int f, int p) {
  if (b == 0) return {std::max(0, f - d), a == 0 ? f : std::min(f, p - d - 2)};
  return {std::max(0, d + f + 2 - p), std::min(d, f)};
}

bool congruent(const Setup& st, const std::vector<unsigned>& a, const std::vector<unsigned>& b,
               const std::vector<unsigned>& k, const SimpleLabel& d, const SimpleLabel& f) {
  std::int64_t lhs = 0, rhs = 0;
  const auto p = static_cast<std::int64_t>(st.p);
  for (std::size_t i = 0; i < st.s; ++i) {
    lhs += 2 * (p * a[i] + b[i]) * st.place[i];
    rhs += (static_cast<std::int64_t>(d.weights[i]) - f.weights[i] + 2 * static_cast<std::int64_t>(k[i]) -
            2 * static_cast<std::int64_t>(b[i]) * d.weights[i]) *
           st.place[i];
  }
  std::int64_t diff = (lhs - rhs) % st.modulus;
  return diff == 0;
}

class Enumerator {
public:
  Enumerator(unsigned n, const SimpleLabel& d, const SimpleLabel& f, std::vector<CarlsonSolution>* sink)
      : n_(n), d_(d), f_(f), st_(prepare(d, f)), sink_(sink), a_(st_.s, 0), b_(st_.s, 0), k_(st_.s, 0) {}

  Count run() {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << st_.s); ++mask) {
      unsigned bsum = 0;
      bool ok = true;
      for (std::size_t i = 0; i < st_.s; ++i) {
        b_[i] = (mask >> i) & 1u;
        bsum += b_[i];
        if (b_[i] && st_.blocked[i]) ok = false;
      }
      if (!ok || bsum > n_ || (n_ - bsum) % 2 != 0) continue;
      spread_a(0, (n_ - bsum) / 2);
    }
    return count_;
  }

private:
  void spread_a(std::size_t i, unsigned budget) {
    if (i + 1 == st_.s) {
      if (budget > 0 && st_.blocked[i]) return;
      a_[i] = budget;
      choose_k(0);
      a_[i] = 0;
      return;
    }
    const unsigned top = st_.blocked[i] ? 0 : budget;
    for (unsigned x = 0; x <= top; ++x) {
      a_[i] = x;
      spread_a(i + 1, budget - x);
    }
    a_[i] = 0;
  }

  void choose_k(std::size_t i) {
    if (i == st_.s) {
      if (!congruent(st_, a_, b_, k_, d_, f_)) return;
      count_ = checked_add(count_, 1);
      if (sink_) sink_->push_back({a_, b_, k_});
      return;
    }
    auto [lo, hi] = k_window(a_[i], b_[i], static_cast<int>(d_.weights[i]), static_cast<int>(f_.weights[i]),
                             static_cast<int>(st_.p));
    for (int k = lo; k <= hi; ++k) {
      k_[i] = static_cast<unsigned>(k);
      choose_k(i + 1);
    }
    k_[i] = 0;
  }

  unsigned n_;
  const SimpleLabel& d_;
  const SimpleLabel& f_;
  Setup st_;
  std::vector<CarlsonSolution>* sink_;
  std::vector<unsigned> a_, b_, k_;
  Count count_ = 0;
};

// Direct transcription of the five conditions, used by the second enumerator.
bool satisfies(unsigned n, const Setup& st, const SimpleLabel& d, const SimpleLabel& f,
               const std::vector<unsigned>& a, const std::vector<unsigned>& b, const std::vector<unsigned>& k) {
  unsigned total = 0;
  for (std::size_t i = 0; i < st.s; ++i) total += 2 * a[i] + b[i];
  if (total != n) return false;
  for (std::size_t i = 0; i < st.s; ++i) {
    if (b[i] > 1) return false;
    if (st.blocked[i] && (a[i] != 0 || b[i] != 0)) return false;
    const int di = static_cast<int>(d.weights[i]), fi = static_cast<int>(f.weights[i]);
    const int ki = static_cast<int>(k[i]), p = static_cast<int>(st.p);
    if (b[i] == 0) {
      if (ki < std::max(0, fi - di)) return false;
      if (a[i] == 0 ? ki > fi : ki > std::min(fi, p - di - 2)) return false;
    } else {
      if (ki < std::max(0, di + fi + 2 - p) || ki > std::min(di, fi)) return false;
    }
  }
  return congruent(st, a, b, k, d, f);
}

bool odometer(std::vector<unsigned>& v, unsigned top) {
  for (auto& x : v) {
    if (x < top) {
      ++x;
      return true;
    }
    x = 0;
  }
  return false;
}

}  // namespace

std::vector<CarlsonSolution> carlson_solutions(unsigned n, const SimpleLabel& d, const SimpleLabel& f) {
  std::vector<CarlsonSolution> out;
  Enumerator(n, d, f, &out).run();
  return out;
}

Count dim_ext_finite(unsigned n, const SimpleLabel& d, const SimpleLabel& f) {
  return Enumerator(n, d, f, nullptr).run();
}

Count dim_ext_finite_kfirst(unsigned n, const SimpleLabel& d, const SimpleLabel& f) {
  const Setup st = prepare(d, f);
  const auto kmax = static_cast<unsigned>(st.p - 1);
  std::vector<unsigned> k(st.s, 0);
  Count count = 0;
  do {
    std::vector<unsigned> b(st.s, 0);
    do {
      std::vector<unsigned> a(st.s, 0);
      do {
        if (satisfies(n, st, d, f, a, b, k)) count = checked_add(count, 1);
      } while (odometer(a, n / 2));
    } while (odometer(b, 1));
  } while (odometer(k, kmax));
  return count;
}

Count dim_H_finite(unsigned n, const SimpleLabel& f) { return dim_ext_finite(n, SimpleLabel::zero(f.p, f.s()), f); }

std::int64_t carlson_multiplier(const CarlsonSolution& sol, const SimpleLabel& d, const SimpleLabel& f) {
  const Setup st = prepare(d, f);
  const auto p = static_cast<std::int64_t>(st.p);
  std::int64_t lhs = 0, rhs = 0;
  for (std::size_t i = 0; i < st.s; ++i) {
    lhs += 2 * (p * sol.a[i] + static_cast<std::int64_t>(sol.b[i]) * (1 + d.weights[i])) * st.place[i];
    rhs += (static_cast<std::int64_t>(d.weights[i]) - f.weights[i] + 2 * static_cast<std::int64_t>(sol.k[i])) *
           st.place[i];
  }
  if ((lhs - rhs) % st.modulus != 0) throw std::logic_error("not a solution of the congruence");
  return (lhs - rhs) / st.modulus;
}

namespace {

std::vector<SimpleLabel> all_labels(std::uint64_t p, std::size_t s) {
  std::vector<SimpleLabel> out;
  std::uint64_t total = ipow(p, static_cast<unsigned>(s));
  for (std::uint64_t m = 0; m < total; ++m) out.push_back(SimpleLabel::of_integer(m, p, s));
  return out;
}

FiniteReport check_pairs(const FiniteSweep& sw, const std::vector<std::pair<SimpleLabel, SimpleLabel>>& pairs,
                         std::size_t lo, std::size_t hi) {
  FiniteReport rep;
  rep.p = sw.p;
  rep.s = sw.s;
  bool seen_t = false;
  for (std::size_t idx = lo; idx < hi; ++idx) {
    const auto& [d, f] = pairs[idx];
    const bool d_zero = d.max_weight() == 0;
    Count kcount = 1;
    for (std::size_t i = 0; i < d.s(); ++i) kcount = checked_mul(kcount, std::min(d.weights[i], f.weights[i]) + 1);
    for (unsigned n = 0; n <= sw.n_max; ++n) {
      const auto sols = carlson_solutions(n, d, f);
      const Count dim = sols.size();
      ++rep.cases;
      rep.solutions += dim;
      rep.max_dim = std::max(rep.max_dim, dim);
      const Count other = dim_ext_finite_kfirst(n, d, f);
      if (other != dim) rep.violations.push_back({n, d, f, dim, other, 0.0, "enumerators disagree"});
      if (n == 0 && d == f && dim > 1) ++rep.hom_above_one;
      // The bound carries a factor C_n, and C_0 = 0, so it says nothing at n = 0.
      if (n >= 1) {
        const BoundConstant cn = bound_C(n);
        const auto bound = scale_up(cn, checked_mul(2 * n + 2 * d.max_weight() + 7, kcount));
        if (!within(dim, bound)) rep.violations.push_back({n, d, f, dim, 0, bound.value, "finite-group bound"});
        if (d_zero) {
          const auto b0 = scale_up(cn, 2 * n + 7);
          if (!within(dim, b0)) rep.violations.push_back({n, d, f, dim, 0, b0.value, "(2n+7)C_n"});
        }
      }
      const std::int64_t lo_t = -3, hi_t = 2 * static_cast<std::int64_t>(n) + 2 * d.max_weight() + 3;
      for (const auto& sol : sols) {
        const std::int64_t t = carlson_multiplier(sol, d, f);
        if (!seen_t) {
          rep.t_min = rep.t_max = t;
          seen_t = true;
        }
        rep.t_min = std::min(rep.t_min, t);
        rep.t_max = std::max(rep.t_max, t);
        if (t < lo_t || t > hi_t) ++rep.t_outside;
      }
    }
  }
  return rep;
}

}  // namespace

FiniteReport verify_finite_bound(const FiniteSweep& sw) {
  require_odd_prime(sw.p, "the finite-group bound");
  if (sw.s == 0) throw std::invalid_argument("s must be at least 1");
  const auto labels = all_labels(sw.p, sw.s);
  std::vector<std::pair<SimpleLabel, SimpleLabel>> pairs;
  if (sw.sample == 0) {
    for (const auto& d : labels)
      for (const auto& f : labels) pairs.emplace_back(d, f);
  } else {
    std::mt19937_64 rng(sw.seed);
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    for (std::uint64_t i = 0; i < sw.sample; ++i) pairs.emplace_back(labels[pick(rng)], labels[pick(rng)]);
  }
  const std::size_t chunk = std::max<std::size_t>(1, pairs.size() / 64);
  const std::size_t shards = (pairs.size() + chunk - 1) / chunk;
  auto parts = run_shards<FiniteReport>(sw.threads, shards, [&](std::size_t s) {
    return check_pairs(sw, pairs, s * chunk, std::min(pairs.size(), (s + 1) * chunk));
  });
  FiniteReport total;
  total.p = sw.p;
  total.s = sw.s;
  bool seen_t = false;
  for (const auto& part : parts) {
    total.cases += part.cases;
    total.solutions += part.solutions;
    total.max_dim = std::max(total.max_dim, part.max_dim);
    total.t_outside += part.t_outside;
    total.hom_above_one += part.hom_above_one;
    total.violations.insert(total.violations.end(), part.violations.begin(), part.violations.end());
    if (part.solutions > 0) {
      total.t_min = seen_t ? std::min(total.t_min, part.t_min) : part.t_min;
      total.t_max = seen_t ? std::max(total.t_max, part.t_max) : part.t_max;
      seen_t = true;
    }
  }
  return total;
}

StabilizationProbe generic_stabilization_probe(unsigned n, std::uint64_t m, std::uint64_t p, std::size_t s_min,
                                               std::size_t s_max) {
  require_odd_prime(p, "the stabilization probe");
  if (s_min == 0 || s_max < s_min) throw std::invalid_argument("need 1 <= s_min <= s_max");
  if (m >= ipow(p, static_cast<unsigned>(s_min)))
    throw std::invalid_argument("m must be below p^s_min so that L(m) has a label at every s");
  StabilizationProbe probe{n, m, p, {}, std::nullopt, false};
  for (std::size_t s = s_min; s <= s_max; ++s) probe.rows.push_back({s, dim_H_finite(n, SimpleLabel::of_integer(m, p, s))});
  std::size_t start = probe.rows.size() - 1;
  while (start > 0 && probe.rows[start - 1].dim == probe.rows.back().dim) --start;
  probe.stable_from = probe.rows[start].s;
  probe.tail_constant = probe.rows.size() >= 2 && probe.rows[probe.rows.size() - 2].dim == probe.rows.back().dim;
  return probe;
}

}  // namespace sl2coh
