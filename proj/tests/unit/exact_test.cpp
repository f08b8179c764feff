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

#include <random>

#include <boost/math/constants/constants.hpp>
#include <gtest/gtest.h>

#include "dirichlet/exact.hpp"

using namespace dirichlet;
using namespace dirichlet::exact;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

PiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exps(0, 8), nums(-100, 100), dens(1, 100),
      count(0, 4);
  PiPoly p;
  for (int i = count(rng); i > 0; --i) {
    p += PiPoly::monomial(q(nums(rng), dens(rng)), exps(rng));
  }
  return p;
}

}  // namespace

TEST(Rational, StaysReduced) {
  const Rational r = q(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    const int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (b == 0 || e == 0) continue;
    Rational x = q(a, b) * q(c, e) + q(a, e) - q(c, b);
    if (c != 0) x = x / q(c, e);
    EXPECT_GT(x.den(), 0);
    EXPECT_EQ(boost::multiprecision::gcd(abs(x.num()), x.den()), x.is_zero() ? x.den() : 1);
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(q(1) / Rational(), DomainError);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError);
}

TEST(Rational, OrderingAndText) {
  EXPECT_LT(q(-1, 2), q(1, 3));
  EXPECT_EQ(q(10, 4).str(), "5/2");
  EXPECT_EQ(q(-7).str(), "-7");
  EXPECT_DOUBLE_EQ(q(1, 8).to_double(), 0.125);
}

TEST(EulerNumbers, SmallTables) {
  EXPECT_EQ(euler_numbers(1).values, std::vector<Rational>{q(1)});
  EXPECT_EQ(euler_numbers(4).values, (std::vector<Rational>{q(1), q(-1), q(5), q(-61)}));
  EXPECT_EQ(euler_numbers(5).values.back(), q(1385));
  EXPECT_THROW(euler_numbers(0), DomainError);
}

TEST(EulerNumbers, MatchMpmathValues) {
  const std::int64_t expected[] = {1, -1, 5, -61, 1385, -50521, 2702765,
                                   -199360981, 19391512145};
  const EulerTable t = euler_numbers(9);
  for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(t.values[k], q(expected[k])) << k;
}

TEST(EulerNumbers, BinomialRecurrence) {
  const EulerTable t = euler_numbers(30);
  for (unsigned k = 1; k < 30; ++k) {
    Rational acc;
    for (unsigned j = 0; j <= k; ++j) acc += Rational(binomial(2 * k, 2 * j)) * t.values[j];
    EXPECT_TRUE(acc.is_zero()) << "k=" << k;
    EXPECT_TRUE(t.values[k].is_integer());
    EXPECT_EQ(t.values[k].sign(), k % 2 == 0 ? 1 : -1);
  }
}

TEST(EulerNumbers, SharedTableGrows) {
  auto a = shared_euler_numbers(3);
  ASSERT_GE(a->values.size(), 3u);
  auto b = shared_euler_numbers(40);
  ASSERT_GE(b->values.size(), 40u);
  EXPECT_EQ(a->values[2], q(5));
  EXPECT_EQ(b->values[2], q(5));
  EXPECT_EQ(b->values[39], euler_numbers(40).values[39]);
}

TEST(BernoulliNumbers, Values) {
  EXPECT_EQ(bernoulli_numbers(1).values, std::vector<Rational>{q(1)});
  EXPECT_EQ(bernoulli_numbers(2).values, (std::vector<Rational>{q(1), q(1, 6)}));
  const auto t = bernoulli_numbers(6);
  EXPECT_EQ(t.values, (std::vector<Rational>{q(1), q(1, 6), q(-1, 30), q(1, 42),
                                             q(-1, 30), q(5, 66)}));
  const auto big = bernoulli_numbers(25);
  for (std::size_t m = 1; m < big.values.size(); ++m) {
    EXPECT_EQ(big.values[m].sign(), m % 2 == 1 ? 1 : -1) << m;
  }
  EXPECT_EQ(shared_bernoulli_numbers(4)->values[3], q(1, 42));
}

TEST(PiPoly, Arithmetic) {
  const PiPoly two = PiPoly::monomial(q(2), 2);
  const PiPoly three = PiPoly::monomial(q(3), 2);
  EXPECT_EQ(pipoly_add(two, three), PiPoly::monomial(q(5), 2));
  EXPECT_EQ(pipoly_mul(PiPoly::monomial(q(1, 4), 1), PiPoly::monomial(q(1, 8), 2)),
            PiPoly::monomial(q(1, 32), 3));
  EXPECT_TRUE(pipoly_scale(two, q(0)).is_zero());
  EXPECT_TRUE(pipoly_sub(two, two).terms().empty());
  EXPECT_TRUE(PiPoly::monomial(q(0), 3).terms().empty());
  EXPECT_EQ(PiPoly::half_pi_power_over_factorial(3), PiPoly::monomial(q(1, 48), 3));
  EXPECT_EQ(PiPoly::monomial(q(5, 1536), 5).str(), "5/1536*pi^5");
  EXPECT_EQ(PiPoly().str(), "0");
  EXPECT_EQ((two - PiPoly::monomial(q(1, 4), 1)).coefficient(1), q(-1, 4));
}

TEST(PiPoly, RingLawsOnRandomInputs) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const PiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const PiPoly d = a * b - c;
    for (const auto& [e, coeff] : d.terms()) EXPECT_FALSE(coeff.is_zero()) << e;
  }
}

TEST(PiPolyEval, Examples) {
  const Approx a = pipoly_eval(PiPoly::monomial(q(1, 8), 2), 15);
  EXPECT_NEAR(to_double(a.value), 1.23370055013617, 1e-14);
  EXPECT_LE(a.error_estimate, 1e-14 * to_double(a.value));
  EXPECT_EQ(to_double(pipoly_eval(PiPoly(), 15).value), 0.0);
  EXPECT_NEAR(to_double(pipoly_eval(PiPoly::monomial(q(1, 4), 1), 15).value),
              0.785398163397448, 1e-15);
  EXPECT_THROW(pipoly_eval(PiPoly(), 14), DomainError);
  EXPECT_THROW(pipoly_eval(PiPoly(), 61), DomainError);
}

TEST(PiPolyEval, PiAgreesWithBoostConstant) {
  const Real reference = boost::math::constants::pi<Real>();
  EXPECT_LT(abs(pi() - reference), Real("1e-75"));
  const Approx a = pipoly_eval(PiPoly::monomial(q(1), 1), 60);
  EXPECT_LT(abs(a.value - reference), Real("1e-60"));
}

TEST(PiPolyEval, Additive) {
  std::mt19937 rng(99);
  for (int digits : {15, 30, 60}) {
    for (int i = 0; i < 50; ++i) {
      const PiPoly a = random_poly(rng), b = random_poly(rng);
      const Real ea = pipoly_eval(a, digits).value;
      const Real eb = pipoly_eval(b, digits).value;
      const Real sum = pipoly_eval(a + b, digits).value;
      const Real scale = abs(ea) + abs(eb);
      EXPECT_LE(abs(sum - (ea + eb)), 2 * pow(Real(10), 1 - digits) * scale);
    }
  }
}
