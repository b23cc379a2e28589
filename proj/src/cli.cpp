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

#include "sl2coh/cli.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "sl2coh/carlson.hpp"
#include "sl2coh/ext_weyl.hpp"
#include "sl2coh/linear_systems.hpp"
#include "sl2coh/report.hpp"
#include "sl2coh/verify.hpp"
#include "sl2coh/weyl_cohomology.hpp"

namespace sl2coh {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  const auto lo = parse_int(text.substr(0, dots)), hi = parse_int(text.substr(dots + 2));
  if (hi < lo) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

int verify_exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed()) return static_cast<int>(ExitStatus::violations_found);
  return static_cast<int>(ExitStatus::ok);
}

namespace {

struct Range {
  std::int64_t lo = 0, hi = 0;
  bool single() const { return lo == hi; }
};

Range range_of(const std::string& text, const char* name, bool allow_negative = false) {
  auto [lo, hi] = parse_range(text);
  if (!allow_negative && lo < 0) throw UsageError(std::string("--") + name + " must be non-negative");
  return {lo, hi};
}

std::uint64_t u(std::int64_t v) { return static_cast<std::uint64_t>(v); }

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto v = parse_int(item);
    if (v < 0) throw UsageError("list entries must be non-negative");
    out.push_back(u(v));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::string digits(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

struct Options {
  std::string format = "csv";
  unsigned threads = 1;
  // shared sweep arguments
  std::uint64_t p = 3;
  std::string m = "0", n = "0", m1 = "0", m2 = "0", lambda1 = "0", lambda2 = "0";
  // nsol
  std::string method = "recursive";
  std::optional<unsigned> r;
  std::string weights;
  bool list = false;
  // ext3
  bool case_lists = false;
  // finite / probe
  std::optional<std::size_t> s;
  std::string f, d;
  std::size_t s_min = 2, s_max = 5;
  // verify
  std::string suite;
  std::string scale = "quick";
};

Row row(std::initializer_list<Field> fields) { return Row(fields); }

RunReport cmd_nsol(const Options& o) {
  RunReport rep;
  rep.command = "nsol";
  const Range M = range_of(o.m, "m"), N = range_of(o.n, "n");
  const bool custom = o.r.has_value() || !o.weights.empty();
  if (o.method != "brute" && o.method != "recursive" && o.method != "sum" && o.method != "closed")
    throw UsageError("unknown method '" + o.method + "' (brute, recursive, sum, closed)");
  if ((custom || o.list) && o.method != "brute")
    throw UsageError("--r, --weights and --list apply to the brute-force method only");
  if (o.list && !(M.single() && N.single())) throw UsageError("--list needs single values of --m and --n");

  for (std::int64_t n = N.lo; n <= N.hi; ++n)
    for (std::int64_t m = M.lo; m <= M.hi; ++m) {
      SystemQuery q = SystemQuery::stabilized(u(m), u(n), o.p);
      if (o.r) {
        if (*o.r == 0) throw UsageError("--r must be at least 1");
        q.r = *o.r;
      }
      if (!o.weights.empty()) q.weights = parse_list(o.weights);
      if (o.list) {
        for (const auto& s : enumerate_solutions(q))
          rep.rows.push_back(row({{"p", o.p}, {"m", m}, {"n", n}, {"a", digits(s.a)}, {"b", digits(s.b)}}));
        continue;
      }
      Count dim = 0;
      if (o.method == "brute") dim = count_solutions(q);
      else if (o.method == "recursive") dim = count_N(m, n, o.p);
      else if (o.method == "sum") dim = count_N_sum_form(m, n, o.p);
      else dim = closed_form_N(u(m), u(n), o.p);
      rep.rows.push_back(row({{"p", o.p}, {"m", m}, {"n", n}, {"dim", dim}}));
    }
  return rep;
}

RunReport cmd_weyl(const Options& o, bool borel) {
  RunReport rep;
  rep.command = borel ? "bcoh" : "weyl";
  const Range N = range_of(o.n, "n"), M = range_of(o.m, "m");
  require_prime(o.p);
  for (std::int64_t n = N.lo; n <= N.hi; ++n)
    for (std::int64_t m = M.lo; m <= M.hi; ++m) {
      const Count dim = borel ? dim_B_cohomology(n, m, o.p) : dim_weyl_cohomology(n, m, o.p);
      rep.rows.push_back(row({{"p", o.p}, {"n", n}, {"m", m}, {"dim", dim}}));
    }
  return rep;
}

RunReport cmd_ext(const Options& o, bool degree3) {
  RunReport rep;
  rep.command = degree3 ? "ext3" : "ext";
  const Range N = degree3 ? Range{3, 3} : range_of(o.n, "n");
  const Range M1 = range_of(o.m1, "m1"), M2 = range_of(o.m2, "m2");
  if (M1.hi < M2.lo)
    throw UsageError("Ext requires m1 >= m2 (no pair in the given ranges qualifies)");
  for (std::int64_t n = N.lo; n <= N.hi; ++n)
    for (std::int64_t m1 = M1.lo; m1 <= M1.hi; ++m1)
      for (std::int64_t m2 = M2.lo; m2 <= std::min(M2.hi, m1); ++m2) {
        Count dim = 0;
        if (degree3) dim = o.case_lists ? ext3_case_lists(u(m2), u(m1), o.p) : ext3_closed(u(m2), u(m1), o.p);
        else dim = dim_ext(n, u(m2), u(m1), o.p);
        if (degree3) rep.rows.push_back(row({{"p", o.p}, {"m1", m1}, {"m2", m2}, {"dim", dim}}));
        else rep.rows.push_back(row({{"p", o.p}, {"n", n}, {"m1", m1}, {"m2", m2}, {"dim", dim}}));
      }
  return rep;
}

RunReport cmd_specht(const Options& o) {
  RunReport rep;
  rep.command = "specht";
  const Range N = range_of(o.n, "n"), L1 = range_of(o.lambda1, "lambda1"), L2 = range_of(o.lambda2, "lambda2");
  if (L1.hi < L2.lo) throw UsageError("Specht cohomology requires lambda1 >= lambda2");
  for (std::int64_t n = N.lo; n <= N.hi; ++n)
    for (std::int64_t l1 = L1.lo; l1 <= L1.hi; ++l1)
      for (std::int64_t l2 = L2.lo; l2 <= std::min(L2.hi, l1); ++l2)
        rep.rows.push_back(row({{"p", o.p},
                                {"n", n},
                                {"lambda1", l1},
                                {"lambda2", l2},
                                {"dim", specht_dim(n, u(l1), u(l2), o.p)}}));
  return rep;
}

RunReport cmd_finite(const Options& o) {
  RunReport rep;
  rep.command = "finite";
  if (o.f.empty()) throw UsageError("--f is required");
  const SimpleLabel f = SimpleLabel::parse(o.f, o.p);
  const SimpleLabel d = o.d.empty() ? SimpleLabel::zero(o.p, f.s()) : SimpleLabel::parse(o.d, o.p);
  if (o.s && *o.s != f.s()) throw UsageError("--s does not match the length of --f");
  const Range N = range_of(o.n, "n");
  for (std::int64_t n = N.lo; n <= N.hi; ++n)
    rep.rows.push_back(row({{"p", o.p},
                            {"s", static_cast<std::uint64_t>(f.s())},
                            {"n", n},
                            {"dim", dim_ext_finite(static_cast<unsigned>(n), d, f)}}));
  return rep;
}

RunReport cmd_probe(const Options& o) {
  RunReport rep;
  rep.command = "probe-stabilization";
  const Range N = range_of(o.n, "n"), M = range_of(o.m, "m");
  for (std::int64_t n = N.lo; n <= N.hi; ++n)
    for (std::int64_t m = M.lo; m <= M.hi; ++m) {
      const auto probe = generic_stabilization_probe(static_cast<unsigned>(n), u(m), o.p, o.s_min, o.s_max);
      for (const auto& r : probe.rows)
        rep.rows.push_back(row({{"p", o.p},
                                {"n", n},
                                {"m", m},
                                {"s", static_cast<std::uint64_t>(r.s)},
                                {"dim", r.dim},
                                {"stable_from", static_cast<std::uint64_t>(probe.stable_from.value_or(0))},
                                {"tail_constant", static_cast<std::uint64_t>(probe.tail_constant)}}));
    }
  return rep;
}

RunReport cmd_verify(const Options& o, std::ostream& err) {
  RunReport rep;
  rep.command = "verify";
  Scale scale;
  if (o.scale == "quick") scale = Scale::quick;
  else if (o.scale == "full") scale = Scale::full;
  else throw UsageError("--scale must be quick or full");
  std::vector<std::string> suites;
  if (o.suite == "all") suites = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), o.suite) != suite_names().end()) suites = {o.suite};
  else throw UsageError("unknown suite '" + o.suite + "'");
  std::vector<CheckResult> results;
  for (const auto& name : suites)
    for (auto& c : run_suite(name, scale, o.threads)) results.push_back(std::move(c));
  rep.status = static_cast<ExitStatus>(verify_exit_code(results));
  for (const auto& c : results) {
    const char* status = c.informational ? "info" : (c.violations == 0 ? "pass" : "fail");
    rep.rows.push_back(row({{"suite", c.suite},
                            {"check", c.check},
                            {"cases", c.cases},
                            {"violations", c.violations},
                            {"status", std::string(status)},
                            {"note", c.note}}));
    if (!c.passed()) {
      rep.violations.push_back(c.suite + ": " + c.check);
      for (const auto& s : c.samples) err << "  " << c.suite << " / " << c.check << ": " << s << '\n';
    }
  }
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact cohomology and Ext dimensions for SL2 Weyl modules and SL2(p^s)"};
  app.name("sl2coh");
  app.require_subcommand(1, 1);
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", o.threads, "worker threads for sweeps")->check(CLI::Range(1u, 256u));

  auto prime = [&](CLI::App* sub) { sub->add_option("--p", o.p, "prime")->required(); };

  auto* nsol = app.add_subcommand("nsol", "count solutions N(m,n) of the two-equation system");
  prime(nsol);
  nsol->add_option("--m", o.m, "weight m or lo..hi")->required();
  nsol->add_option("--n", o.n, "degree n or lo..hi")->required();
  nsol->add_option("--method", o.method, "brute, recursive, sum or closed");
  nsol->add_option("--r", o.r, "vector length (brute force only)");
  nsol->add_option("--weights", o.weights, "d_1,...,d_r for the weighted system (brute force only)");
  nsol->add_flag("--list", o.list, "list every solution (a, b)");

  auto* weyl = app.add_subcommand("weyl", "dim H^n(SL2, V(m))");
  auto* bcoh = app.add_subcommand("bcoh", "dim H^n(B, -m)");
  for (auto* sub : {weyl, bcoh}) {
    prime(sub);
    sub->add_option("--n", o.n, "degree or lo..hi")->required();
    sub->add_option("--m", o.m, "weight or lo..hi")->required();
  }

  auto* ext = app.add_subcommand("ext", "dim Ext^n(V(m2), V(m1)), m1 >= m2");
  prime(ext);
  ext->add_option("--n", o.n, "degree or lo..hi")->required();
  auto* ext3 = app.add_subcommand("ext3", "dim Ext^3(V(m2), V(m1)) from the closed form");
  prime(ext3);
  ext3->add_flag("--case-lists", o.case_lists, "use the literal digit-shape case lists instead");
  for (auto* sub : {ext, ext3}) {
    sub->add_option("--m1", o.m1, "target weight or lo..hi")->required();
    sub->add_option("--m2", o.m2, "source weight or lo..hi")->required();
  }

  auto* specht = app.add_subcommand("specht", "dim H^n(Sigma_d, S^(lambda1,lambda2))");
  prime(specht);
  specht->add_option("--n", o.n, "degree or lo..hi")->required();
  specht->add_option("--lambda1", o.lambda1, "first part or lo..hi")->required();
  specht->add_option("--lambda2", o.lambda2, "second part or lo..hi")->required();

  auto* finite = app.add_subcommand("finite", "dim Ext^n(L_d, L_f) for SL2(p^s)");
  prime(finite);
  finite->add_option("--s", o.s, "field degree (checked against --f)");
  finite->add_option("--n", o.n, "degree or lo..hi")->required();
  finite->add_option("--f", o.f, "f_1,...,f_s")->required();
  finite->add_option("--d", o.d, "d_1,...,d_s (default all zero)");

  auto* probe = app.add_subcommand("probe-stabilization", "dim H^n(SL2(p^s), L(m)) as s grows");
  prime(probe);
  probe->add_option("--n", o.n, "degree or lo..hi")->required();
  probe->add_option("--m", o.m, "weight or lo..hi")->required();
  probe->add_option("--s-min", o.s_min, "smallest s");
  probe->add_option("--s-max", o.s_max, "largest s");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name or 'all'")->required();
  verify->add_option("--scale", o.scale, "quick or full");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitStatus::usage_error);
  }

  try {
    RunReport rep;
    if (nsol->parsed()) rep = cmd_nsol(o);
    else if (weyl->parsed()) rep = cmd_weyl(o, false);
    else if (bcoh->parsed()) rep = cmd_weyl(o, true);
    else if (ext->parsed()) rep = cmd_ext(o, false);
    else if (ext3->parsed()) rep = cmd_ext(o, true);
    else if (specht->parsed()) rep = cmd_specht(o);
    else if (finite->parsed()) rep = cmd_finite(o);
    else if (probe->parsed()) rep = cmd_probe(o);
    else rep = cmd_verify(o, err);
    if (o.format == "json") write_json(rep, out);
    else write_csv(rep, out);
    return static_cast<int>(rep.status);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitStatus::usage_error);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitStatus::usage_error);
  }
}

}  // namespace sl2coh
