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
#include <cmath>
#include <future>
#include <numbers>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "dirichlet/jfun.hpp"

using namespace dirichlet;
using namespace dirichlet::jfun;
using exact::BigInt;
using exact::PiPoly;
using exact::Rational;

namespace {

constexpr double kPi = std::numbers::pi;

// mpmath, 40 digits (tests/oracles/reference_values.py).
const std::vector<std::pair<double, double>> kJ = {
    {0.01, 64.46969745102864680602106},
    {0.1, 7.162547595166135550228884},
    {0.5, 1.977715346879405619100026},
    {1, 1.166243616123275120553538},
    {2, 0.492738102245341832233671},
    {3, 0.1796320799769160785736784},
    {3.5, 0.1011261779011461475761455},
    {4, 0.05446177989621796124765819},
    {5, 0.01397549258711504940339572},
    {6, 0.003097230230485313188961842},
    {7, 0.000603096125527420940617473},
    {8, 0.0001046457624437379251061877},
};

double oracle(double s) {
  for (const auto& [t, v] : kJ) {
    if (t == s) return v;
  }
  return std::nan("");
}

EvalResult closed(unsigned n) {
  return n % 2 == 1 ? j_closed_odd((n + 1) / 2, 20) : j_closed_even(n / 2, 20);
}

}  // namespace

TEST(Integrand, EndpointLimits) {
  EXPECT_EQ(integrand(1, 0), 1.0);
  EXPECT_EQ(integrand(2, 0), 0.0);
  EXPECT_TRUE(std::isinf(integrand(0.5, 0)));
  EXPECT_NEAR(integrand(1, 1e-8), 1.0, 1e-15);
  EXPECT_NEAR(integrand(2, kPi / 2), kPi * kPi / 4, 1e-14);
  EXPECT_TRUE(std::isfinite(integrand(3, 1e-300)));
}

TEST(Gamma, ExactAtIntegers) {
  EXPECT_EQ(gamma_plus_one(5), 120.0);
  EXPECT_EQ(gamma_plus_one(0), 1.0);
  EXPECT_NEAR(gamma_plus_one(0.5), std::sqrt(kPi) / 2, 1e-15);
}

TEST(Quadrature, MatchesOracle) {
  for (const auto& [s, expected] : kJ) {
    QuadratureConfig cfg;
    cfg.target_rel_tol = 1e-14;
    const EvalResult r = j_quadrature(s, cfg);
    const double tol = std::max(1e-13, 1e-14 * expected);
    EXPECT_NEAR(r.approx(), expected, tol) << "s=" << s;
    EXPECT_LE(r.error_estimate, tol) << "s=" << s;
    EXPECT_EQ(r.method, Method::quadrature);
    EXPECT_GT(r.work, 0u);
  }
  EXPECT_NEAR(j_quadrature(1).approx(), 4 * 0.9159655941772190150546035 / kPi, 1e-14);
}

TEST(Quadrature, ConfigValidation) {
  QuadratureConfig bad;
  bad.target_abs_tol = 0;
  EXPECT_THROW(j_quadrature(1, bad), DomainError);
  bad = {};
  bad.max_level = 21;
  EXPECT_THROW(j_quadrature(1, bad), DomainError);
  bad.max_level = 0;
  EXPECT_THROW(j_quadrature(1, bad), DomainError);
  EXPECT_THROW(j_quadrature(0), DomainError);
  EXPECT_THROW(j_quadrature(-1), DomainError);
}

TEST(Quadrature, ReportsConvergenceFailure) {
  // J(0.01) is about 64, so 1e-13 absolute sits below the rounding floor.
  try {
    j_quadrature(0.01);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.argument(), 0.01);
    EXPECT_GT(e.achieved(), 1e-13);
  }
  QuadratureConfig shallow;
  shallow.max_level = 1;
  EXPECT_THROW(j_quadrature(2.5, shallow), ConvergenceError);
}

TEST(Quadrature, ConcurrentCallsAgree) {
  std::vector<std::future<double>> jobs;
  for (int i = 0; i < 8; ++i) {
    jobs.push_back(std::async(std::launch::async, [i] {
      QuadratureConfig cfg;
      cfg.target_abs_tol = 1e-14;
      return j_quadrature(1.0 + 0.5 * (i % 2), cfg).approx();
    }));
  }
  std::vector<double> v;
  for (auto& j : jobs) v.push_back(j.get());
  for (int i = 2; i < 8; ++i) EXPECT_EQ(v[i], v[i % 2]);
}

TEST(EulerSeries, FirstTermAndPositivity) {
  EXPECT_NEAR(to_double(euler_series_term(1, 0)), kPi / 4, 1e-16);
  for (unsigned n = 1; n <= 8; ++n) {
    Real prev = euler_series_term(n, 0);
    for (unsigned k = 0; k < 60; ++k) {
      const Real t = euler_series_term(n, k);
      EXPECT_GT(t, 0) << n << "," << k;
      EXPECT_LE(t, euler_series_term_bound(n, k) * Real(1.01)) << n << "," << k;
      if (k > 0) {
        EXPECT_LT(t, prev) << n << "," << k;
      }
      prev = t;
    }
  }
}

TEST(EulerSeries, MatchesQuadrature) {
  EXPECT_NEAR(j_euler_series(1, 1e-12).approx(), j_quadrature(1).approx(), 2e-12);
  EXPECT_NEAR(j_euler_series(2, 1e-12).approx(), j_quadrature(2).approx(), 2e-12);
  for (unsigned n = 1; n <= 8; ++n) {
    const EvalResult r = j_euler_series(n, 1e-14);
    EXPECT_NEAR(r.approx(), oracle(n), 1e-14) << n;
    EXPECT_LE(r.error_estimate, 1e-14);
    EXPECT_EQ(r.method, Method::euler_series);
  }
}

TEST(EulerSeries, Errors) {
  EXPECT_THROW(j_euler_series(0, 1e-12), DomainError);
  EXPECT_THROW(j_euler_series(1, 0), DomainError);
  EulerSeriesConfig tiny;
  tiny.max_euler_index = 2;
  EXPECT_THROW(j_euler_series(1, 1e-15, tiny), ConvergenceError);
}

TEST(ClosedForms, Examples) {
  const double catalan = 0.9159655941772190150546035;
  EXPECT_NEAR(j_closed_odd(1, 15).approx(), 4 / kPi * catalan, 1e-15);
  EXPECT_NEAR(j_closed_odd(2, 15).approx(), j_quadrature(3).approx(), 1e-10);
  EXPECT_NEAR(j_closed_odd(3, 15).approx(), j_quadrature(5).approx(), 1e-10);
  EXPECT_NEAR(j_closed_even(1, 15).approx(), j_quadrature(2).approx(), 1e-10);
  EXPECT_NEAR(j_closed_even(2, 15).approx(), j_quadrature(4).approx(), 1e-10);
  EXPECT_NEAR(j_closed_even(3, 15).approx(), j_euler_series(6, 1e-12).approx(), 1e-9);
  EXPECT_THROW(j_closed_odd(0, 15), DomainError);
  EXPECT_THROW(j_closed_even(0, 15), DomainError);
}

TEST(ClosedForms, HighPrecision) {
  // J(3) at 25 digits from the mpmath oracle.
  const EvalResult r = j_closed_odd(2, 30);
  EXPECT_LT(abs(r.value - Real("0.1796320799769160785736784")), Real("1e-24"));
  EXPECT_LT(r.error_estimate, 1e-28);
}

TEST(CrossMethod, PairwiseAgreement) {
  for (unsigned n = 1; n <= 8; ++n) {
    const EvalResult q = j_quadrature(n);
    const EvalResult e = j_euler_series(n, 1e-12);
    const EvalResult c = closed(n);
    const EvalResult* all[] = {&q, &e, &c};
    for (const EvalResult* a : all) {
      for (const EvalResult* b : all) {
        const double bound = 10 * std::max(a->error_estimate, b->error_estimate);
        EXPECT_LE(to_double(abs(a->value - b->value)), bound)
            << "n=" << n << " " << to_string(a->method) << " vs " << to_string(b->method);
      }
    }
  }
}

TEST(RiemannSum, Examples) {
  EXPECT_NEAR(j_riemann_sum(1, 1), kPi / 4 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(j_riemann_sum(1, 10000), j_quadrature(1).approx(), 1e-6);
  EXPECT_NEAR(j_riemann_sum(2, 10000), j_quadrature(2).approx(), 1e-6);
}

TEST(RiemannSum, ConvergesMonotonically) {
  for (double s : {1.0, 2.0, 3.5}) {
    QuadratureConfig cfg;
    cfg.target_abs_tol = 1e-13;
    const double ref = j_quadrature(s, cfg).approx();
    for (unsigned n : {100u, 200u, 400u, 800u}) {
      EXPECT_LT(std::fabs(j_riemann_sum(s, 2 * n) - ref), std::fabs(j_riemann_sum(s, n) - ref))
          << "s=" << s << " n=" << n;
    }
  }
}

TEST(WExpansion, Examples) {
  const auto q = [](std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); };
  EXPECT_EQ(w_expansion(0).coefficients, std::vector<PiPoly>{PiPoly::constant(1)});
  EXPECT_EQ(w_expansion(1).coefficients,
            (std::vector<PiPoly>{PiPoly::monomial(q(1, 2), 1), PiPoly::constant(-1)}));
  EXPECT_EQ(w_expansion(2).coefficients,
            (std::vector<PiPoly>{PiPoly::monomial(q(1, 8), 2), PiPoly::monomial(q(-1, 2), 1),
                                 PiPoly::constant(1)}));
  for (unsigned m = 0; m <= 12; ++m) {
    const WExpansion w = w_expansion(m);
    ASSERT_EQ(w.order, m);
    ASSERT_EQ(w.coefficients.size(), m + 1);
    EXPECT_EQ(w.coefficients[m], PiPoly::constant(m % 2 == 0 ? 1 : -1));
    for (unsigned k = 0; k <= m; ++k) {
      PiPoly expected = PiPoly::half_pi_power_over_factorial(m - k);
      if (k % 2 == 1) expected = -expected;
      EXPECT_EQ(w.coefficients[k], expected) << m << "," << k;
    }
  }
}
