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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dirichlet/linalg.hpp"

using namespace dirichlet;
using namespace dirichlet::linalg;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSizes[] = {1, 2, 3, 4, 8, 16, 32, 64};

}  // namespace

TEST(OddGridMatrix, SmallCases) {
  const OddGridMatrix s1 = build_matrix(1, TrigKind::sine);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_NEAR(s1(0, 0), std::sqrt(0.5), 4e-16);
  EXPECT_NEAR(build_matrix(1, TrigKind::cosine)(0, 0), std::sqrt(0.5), 4e-16);
  const OddGridMatrix s2 = build_matrix(2, TrigKind::sine);
  EXPECT_NEAR(s2(0, 0), std::sin(kPi / 8), 4e-16);
  EXPECT_NEAR(s2(0, 1), std::sin(3 * kPi / 8), 4e-16);
  EXPECT_NEAR(s2(1, 1), std::sin(9 * kPi / 8), 4e-16);
  EXPECT_THROW(build_matrix(0, TrigKind::sine), DomainError);
}

TEST(OddGridMatrix, SymmetricAndBounded) {
  for (double nd : kSizes) {
    const auto n = static_cast<std::size_t>(nd);
    for (TrigKind kind : {TrigKind::sine, TrigKind::cosine}) {
      const OddGridMatrix m = build_matrix(n, kind);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          EXPECT_EQ(m(i, j), m(j, i));
          EXPECT_LE(std::fabs(m(i, j)), 1.0);
        }
      }
    }
  }
  // Exact angle reduction agrees with the direct formula where libm is exact enough.
  const std::size_t n = 7;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = (2.0 * i + 1) * (2.0 * j + 1) * kPi / (4.0 * n);
      EXPECT_NEAR(odd_grid_entry(n, TrigKind::sine, i, j), std::sin(angle), 1e-14);
      EXPECT_NEAR(odd_grid_entry(n, TrigKind::cosine, i, j), std::cos(angle), 1e-14);
    }
  }
}

TEST(Involution, HoldsForAllSizes) {
  for (double nd : kSizes) {
    const auto n = static_cast<std::size_t>(nd);
    for (TrigKind kind : {TrigKind::sine, TrigKind::cosine}) {
      const OddGridMatrix m = build_matrix(n, kind);
      EXPECT_LE(involution_defect(m), nd * 1e-13) << n;
      EXPECT_LE(inverse_defect(m), 2 * nd * 1e-13) << n;
      const IdentityReport r = check_involution(n, kind, nd * 1e-13);
      EXPECT_TRUE(r.pass) << n;
      EXPECT_EQ(r.identity_id, kind == TrigKind::sine ? IdentityId::lemma3 : IdentityId::lemma4);
    }
  }
  EXPECT_NEAR(involution_defect(build_matrix(1, TrigKind::sine)), 0.0, 2e-16);
}

TEST(TrigSums, Examples) {
  EXPECT_NEAR(trig_sum_closed(TrigSum::lemma1_cos, 1, 0.7), std::sin(1.4) / (2 * std::sin(0.7)),
              4e-16);
  EXPECT_NEAR(trig_sum_direct(TrigSum::lemma1_cos, 1, 0.7), std::cos(0.7), 4e-16);
  EXPECT_TRUE(trig_sum_check(TrigSum::lemma1_cos, 1, 0.7).pass);
  const IdentityReport s = trig_sum_check(TrigSum::lemma1_sin, 3, 0.3);
  EXPECT_TRUE(s.pass);
  EXPECT_LE(s.abs_diff, 3e-13);
  const IdentityReport a = trig_sum_check(TrigSum::lemma2_altcos, 4, 1.0);
  EXPECT_TRUE(a.pass);
  EXPECT_LE(a.abs_diff, 4e-13);
}

TEST(TrigSums, IndependentClosedForms) {
  for (unsigned n : {1u, 2u, 5u, 17u}) {
    for (double x : {0.2, 0.9, 1.3}) {
      const double nx = n * x;
      EXPECT_NEAR(trig_sum_closed(TrigSum::lemma1_cos, n, x), std::sin(2 * nx) / (2 * std::sin(x)),
                  1e-13);
      EXPECT_NEAR(trig_sum_closed(TrigSum::lemma1_sin, n, x),
                  std::sin(nx) * std::sin(nx) / std::sin(x), 1e-13);
      const double ny = n * (kPi / 2 - x);
      EXPECT_NEAR(trig_sum_closed(TrigSum::lemma2_altcos, n, x),
                  std::sin(ny) * std::sin(ny) / std::cos(x), 1e-13);
    }
  }
}

TEST(TrigSums, RandomCases) {
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<unsigned> pick_n(1, 50);
  std::uniform_real_distribution<double> pick_x(0.05, kPi / 2 - 0.05);
  for (TrigSum which : {TrigSum::lemma1_cos, TrigSum::lemma1_sin, TrigSum::lemma2_altcos}) {
    for (int i = 0; i < 100; ++i) {
      const unsigned n = pick_n(rng);
      const double x = pick_x(rng);
      const IdentityReport r = trig_sum_check(which, n, x);
      EXPECT_TRUE(r.pass) << n << " " << x;
      EXPECT_LE(r.abs_diff, n * 1e-13);
    }
  }
}

TEST(TrigSums, Poles) {
  EXPECT_THROW(trig_sum_closed(TrigSum::lemma1_cos, 3, 0.0), PoleError);
  EXPECT_THROW(trig_sum_closed(TrigSum::lemma1_sin, 3, kPi), PoleError);
  EXPECT_THROW(trig_sum_check(TrigSum::lemma2_altcos, 3, kPi / 2), PoleError);
  EXPECT_THROW(trig_sum_check(TrigSum::lemma2_altcos, 3, kPi / 2), DomainError);
}

TEST(PeriodicSequences, PrintedExample) {
  // n = 10, k = 6: a_6 = a_15 = -a_26 = -a_35 = a_46, b_6 = -b_15 = -b_26 = b_35 = b_46.
  for (std::size_t p = 1; p <= 10; ++p) {
    const auto a = [p](std::size_t k) { return odd_grid_sequence(TrigKind::sine, 10, p, k); };
    const auto b = [p](std::size_t k) { return odd_grid_sequence(TrigKind::cosine, 10, p, k); };
    EXPECT_NEAR(a(6), a(15), 1e-15);
    EXPECT_NEAR(a(6), -a(26), 1e-15);
    EXPECT_NEAR(a(6), -a(35), 1e-15);
    EXPECT_NEAR(a(6), a(46), 1e-15);
    EXPECT_NEAR(b(6), -b(15), 1e-15);
    EXPECT_NEAR(b(6), -b(26), 1e-15);
    EXPECT_NEAR(b(6), b(35), 1e-15);
    EXPECT_NEAR(b(6), b(46), 1e-15);
  }
}

TEST(PeriodicSequences, SampledTriples) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const std::size_t p = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    for (TrigKind kind : {TrigKind::sine, TrigKind::cosine}) {
      for (int form : {0, 1}) {
        const IdentityReport r = check_periodic(kind, n, m, k, p, form);
        EXPECT_TRUE(r.pass) << n << " " << m << " " << k << " " << p << " " << form;
      }
    }
  }
  EXPECT_THROW(check_periodic(TrigKind::sine, 4, 1, 5, 1, 0), DomainError);
  EXPECT_THROW(check_periodic(TrigKind::sine, 4, 1, 1, 1, 2), DomainError);
}

TEST(PeriodicSequences, MixedFormFails) {
  // The mixed form b_k = (-1)^m a_{2mn+k} does not hold in general.
  const double b = odd_grid_sequence(TrigKind::cosine, 10, 1, 6);
  const double a = odd_grid_sequence(TrigKind::sine, 10, 1, 26);
  EXPECT_GT(std::fabs(b - (-a)), 1e-3);
}

TEST(LogTan, Examples) {
  EXPECT_NEAR(log_tan_series(kPi / 2, 1000), 0.0, 1e-12);
  EXPECT_NEAR(log_tan_closed(kPi / 2), 0.0, 4e-16);
  EXPECT_NEAR(log_tan_closed(kPi / 3), 0.2746530721670274228488113, 4e-16);
  EXPECT_NEAR(log_tan_closed(1.0), 0.302291222970795777177709, 4e-16);
  EXPECT_NEAR(log_tan_series(kPi / 3, 1000000), 0.2746530721670274228488113, 1e-5);
  EXPECT_NEAR(log_tan_series(1.0, 1000000), 0.302291222970795777177709, 1e-5);
  EXPECT_THROW(log_tan_series(0.0, 10), DomainError);
  EXPECT_THROW(log_tan_series(kPi, 10), DomainError);
  EXPECT_THROW(log_tan_closed(-1.0), DomainError);
}

TEST(LogTan, AveragedErrorHalves) {
  const double target = log_tan_closed(1.0);
  for (unsigned t : {1000u, 10000u, 100000u}) {
    const double e1 = std::fabs(log_tan_series_averaged(1.0, t) - target);
    const double e2 = std::fabs(log_tan_series_averaged(1.0, 2 * t) - target);
    EXPECT_LT(e2, e1) << t;
  }
}

TEST(LogTan, Reports) {
  for (unsigned t : {10000u, 1000000u}) {
    for (double x : {kPi / 3, 1.0, 0.4, 2.5}) {
      const IdentityReport r = check_log_tan(x, t);
      EXPECT_TRUE(r.pass) << x << " " << t;
      if (t == 1000000u) {
        EXPECT_LE(r.abs_diff, 1e-5);
      }
    }
  }
}

TEST(CscTaylor, Coefficients) {
  const auto c = csc_taylor_coefficients(3);
  using exact::BigInt;
  using exact::Rational;
  EXPECT_EQ(c[0], Rational(1));
  EXPECT_TRUE(c[1].is_zero());
  EXPECT_EQ(c[2], Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(c[4], Rational(BigInt(5), BigInt(24)));
  EXPECT_EQ(c[6], Rational(BigInt(61), BigInt(720)));
  for (unsigned k : {1u, 3u, 8u}) {
    const IdentityReport r = csc_taylor_check(k);
    EXPECT_TRUE(r.pass) << k;
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.abs_diff, 0.0);
  }
  EXPECT_TRUE(csc_taylor_check(40).pass);
  EXPECT_THROW(csc_taylor_check(0), DomainError);
}
