/*
Copyright 2026 The dirichlet-j Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <algorithm>
#include <array>
#include <future>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "dirichlet/cli.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/identities.hpp"
#include "dirichlet/linalg.hpp"

namespace dirichlet::cli {

namespace {

using Reports = std::vector<IdentityReport>;

struct Span {
  std::int64_t lo;
  std::int64_t hi;
};

Span effective(const SuiteOptions& opt, Span fallback) {
  if (!opt.range) return fallback;
  return {opt.range->first, opt.range->second};
}

std::vector<unsigned> positive_ints(Span s) {
  std::vector<unsigned> out;
  for (std::int64_t v = std::max<std::int64_t>(s.lo, 1); v <= s.hi; ++v) {
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

identities::NumericOptions numeric(const SuiteOptions& opt) {
  identities::NumericOptions o;
  o.tol = opt.tol;
  return o;
}

Reports thm1(const SuiteOptions& opt) {
  Reports out;
  for (unsigned m : positive_ints(effective(opt, {1, 5}))) {
    out.push_back(identities::check_theorem1(m, numeric(opt)));
  }
  return out;
}

Reports thm2(const SuiteOptions& opt) {
  Reports out;
  for (unsigned m : positive_ints(effective(opt, {1, 5}))) {
    out.push_back(identities::check_theorem2(m, numeric(opt)));
  }
  return out;
}

Reports thm4(const SuiteOptions& opt) {
  Reports out;
  for (unsigned n : positive_ints(effective(opt, {1, 5}))) {
    out.push_back(identities::check_theorem4(n, true, numeric(opt)));
    out.push_back(identities::check_theorem4(n, false, numeric(opt)));
  }
  return out;
}

Reports remark1(const SuiteOptions& opt) {
  Reports out;
  for (unsigned m : positive_ints(effective(opt, {1, 20}))) {
    auto [a, b] = identities::check_remark1(m);
    out.push_back(std::move(a));
    out.push_back(std::move(b));
  }
  return out;
}

Reports collapse(const SuiteOptions& opt) {
  Reports out;
  for (unsigned m : positive_ints(effective(opt, {1, 8}))) {
    out.push_back(identities::check_collapse(m));
  }
  return out;
}

Reports lemmas(const SuiteOptions& opt) {
  Reports out;
  const Span sizes = effective(opt, {1, 64});
  for (std::size_t n : {1, 2, 3, 4, 8, 16, 32, 64}) {
    if (static_cast<std::int64_t>(n) < sizes.lo ||
        static_cast<std::int64_t>(n) > sizes.hi) {
      continue;
    }
    const double tol = opt.tol ? *opt.tol : static_cast<double>(n) * 1e-13;
    out.push_back(linalg::check_involution(n, TrigKind::sine, tol));
    out.push_back(linalg::check_involution(n, TrigKind::cosine, tol));
  }

  // Trig sums at random (n, x), kept clear of the poles at 0 and pi/2.
  const Span draw = effective(opt, {1, 50});
  const auto n_lo = static_cast<unsigned>(std::max<std::int64_t>(draw.lo, 1));
  const auto n_hi = static_cast<unsigned>(std::max<std::int64_t>(draw.hi, n_lo));
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<unsigned> pick_n(n_lo, n_hi);
  std::uniform_real_distribution<double> pick_x(0.05, std::numbers::pi / 2 - 0.05);
  for (linalg::TrigSum which : {linalg::TrigSum::lemma1_cos, linalg::TrigSum::lemma1_sin,
                                linalg::TrigSum::lemma2_altcos}) {
    for (int i = 0; i < 100; ++i) {
      const unsigned n = pick_n(rng);
      out.push_back(linalg::trig_sum_check(which, n, pick_x(rng)));
    }
  }

  // Periodic sequences on sampled (n, m, k, p).
  std::uniform_int_distribution<std::size_t> pick_m(1, 4);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    const std::size_t m = pick_m(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const std::size_t p = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    for (TrigKind kind : {TrigKind::sine, TrigKind::cosine}) {
      for (int form : {0, 1}) {
        out.push_back(linalg::check_periodic(kind, n, m, k, p, form));
      }
    }
  }

  static constexpr std::array<unsigned, 4> kGrid = {100, 200, 400, 800};
  for (double s : {1.0, 2.0, 3.5}) {
    for (IdentityReport& r : identities::check_riemann_convergence(s, kGrid, 1e-5)) {
      out.push_back(std::move(r));
    }
  }

  const unsigned terms = opt.deep ? 1000000 : 10000;
  for (double x : {std::numbers::pi / 3, 1.0}) {
    out.push_back(linalg::check_log_tan(x, terms));
  }
  out.push_back(linalg::csc_taylor_check(8));
  return out;
}

Reports fourier(const SuiteOptions& opt) {
  Reports out;
  const unsigned long terms = opt.deep ? 1000000 : 10000;
  for (unsigned m : positive_ints(effective(opt, {1, 3}))) {
    for (TrigKind kind : {TrigKind::sine, TrigKind::cosine}) {
      for (unsigned xe = 1; xe <= 4; ++xe) {
        out.push_back(identities::check_fourier(kind, m, xe, terms, opt.tol));
      }
    }
  }
  for (unsigned i = 0; i <= 15; ++i) {
    IdentityReport r = identities::check_eq_a2(i, terms);
    if (opt.tol) r.pass = r.abs_diff <= *opt.tol;
    out.push_back(std::move(r));
  }
  return out;
}

using SuiteFn = Reports (*)(const SuiteOptions&);

struct Suite {
  const char* name;
  SuiteFn fn;
};

constexpr Suite kSuites[] = {
    {"thm1", thm1},       {"thm2", thm2},         {"thm4", thm4},
    {"remark1", remark1}, {"collapse", collapse}, {"lemmas", lemmas},
    {"fourier", fourier},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Suite& s : kSuites) v.emplace_back(s.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

std::vector<IdentityReport> run_suite(std::string_view name,
                                      const SuiteOptions& opt) {
  if (opt.range && opt.range->first > opt.range->second) {
    throw DomainError("empty range");
  }
  Reports out;
  if (name == "all") {
    std::vector<std::future<Reports>> jobs;
    for (const Suite& s : kSuites) {
      jobs.push_back(std::async(std::launch::async, s.fn, std::cref(opt)));
    }
    for (auto& job : jobs) {
      Reports part = job.get();
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  } else {
    const auto it = std::find_if(std::begin(kSuites), std::end(kSuites),
                                 [&](const Suite& s) { return name == s.name; });
    if (it == std::end(kSuites)) {
      throw DomainError("unknown suite '" + std::string(name) + "'");
    }
    out = it->fn(opt);
  }
  std::stable_sort(out.begin(), out.end(), report_order);
  return out;
}

}  // namespace dirichlet::cli
