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

#include "sl2coh/bounds.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace sl2coh {

namespace {

// RAII wrapper over an mpfr_t.
class Real {
public:
  explicit Real(long prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

private:
  mpfr_t v_;
};

// Upper bound for 2*pi/sqrt(3) * factor, with factor >= 0 already an upper value.
void exponent_2pi_over_sqrt3(Real& out, double factor_up, long prec) {
  Real pi(prec), sqrt3(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDU);
  mpfr_sqrt_ui(sqrt3.get(), 3, MPFR_RNDD);
  mpfr_mul_ui(out.get(), pi.get(), 2, MPFR_RNDU);
  mpfr_mul_d(out.get(), out.get(), factor_up, MPFR_RNDU);
  mpfr_div(out.get(), out.get(), sqrt3.get(), MPFR_RNDU);
}

double to_double_up(Real& r) { return mpfr_get_d(r.get(), MPFR_RNDU); }

void check_precision(long prec) {
  if (prec < MPFR_PREC_MIN || prec > 4096) throw std::invalid_argument("bound precision out of range");
}

}  // namespace

BoundConstant bound_C(unsigned n, long prec) {
  check_precision(prec);
  Real x(prec);
  exponent_2pi_over_sqrt3(x, static_cast<double>(n), prec);
  mpfr_exp(x.get(), x.get(), MPFR_RNDU);
  mpfr_mul_2ui(x.get(), x.get(), 2ul * n, MPFR_RNDU);
  mpfr_mul_ui(x.get(), x.get(), n, MPFR_RNDU);
  return {n, to_double_up(x), "C_" + std::to_string(n)};
}

BoundConstant hardy_ramanujan_bound(unsigned n, long prec) {
  check_precision(prec);
  Real x(prec), pi(prec);
  mpfr_set_ui(x.get(), 2ul * n, MPFR_RNDU);
  mpfr_div_ui(x.get(), x.get(), 3, MPFR_RNDU);
  mpfr_sqrt(x.get(), x.get(), MPFR_RNDU);
  mpfr_const_pi(pi.get(), MPFR_RNDU);
  mpfr_mul(x.get(), x.get(), pi.get(), MPFR_RNDU);
  mpfr_exp(x.get(), x.get(), MPFR_RNDU);
  return {n, to_double_up(x), "exp(pi*sqrt(2*" + std::to_string(n) + "/3))"};
}

BoundConstant power_partition_bound(unsigned n, long prec) {
  check_precision(prec);
  Real x(prec);
  exponent_2pi_over_sqrt3(x, static_cast<double>(n), prec);
  mpfr_exp(x.get(), x.get(), MPFR_RNDU);
  mpfr_mul_2ui(x.get(), x.get(), n, MPFR_RNDU);
  return {n, to_double_up(x), "exp(2*pi*" + std::to_string(n) + "/sqrt(3))*2^" + std::to_string(n)};
}

BoundConstant scale_up(const BoundConstant& b, std::uint64_t k) {
  Real x(128);
  mpfr_set_d(x.get(), b.value, MPFR_RNDU);
  mpfr_mul_ui(x.get(), x.get(), k, MPFR_RNDU);
  return {b.n, to_double_up(x), std::to_string(k) + "*" + b.name};
}

BoundConstant add_up(const BoundConstant& a, const BoundConstant& b) {
  Real x(128), y(128);
  mpfr_set_d(x.get(), a.value, MPFR_RNDU);
  mpfr_set_d(y.get(), b.value, MPFR_RNDU);
  mpfr_add(x.get(), x.get(), y.get(), MPFR_RNDU);
  return {a.n, to_double_up(x), a.name + "+" + b.name};
}

bool within(std::uint64_t count, const BoundConstant& bound) {
  return static_cast<long double>(count) <= static_cast<long double>(bound.value);
}

bool strictly_below(std::uint64_t count, const BoundConstant& bound) {
  return static_cast<long double>(count) < static_cast<long double>(bound.value);
}

}  // namespace sl2coh
