// Copyright 2026 The vecfdp Authors
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

#include "vecfdp/logmath.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace vecfdp {
namespace {

TEST(LogPochhammer, EmptyProductIsOne) {
  EXPECT_DOUBLE_EQ(log_pochhammer(5.0, 0).log(), 0.0);
}

TEST(LogPochhammer, SmallIntegerCase) {
  EXPECT_NEAR(log_pochhammer(2.0, 3).log(), std::log(24.0), 1e-13);
}

TEST(LogPochhammer, MatchesExtendedPrecisionProduct) {
  long double prod = 1.0L;
  for (int i = 0; i < 50; ++i) prod *= 0.37L + i;
  double expected = static_cast<double>(std::log(prod));
  EXPECT_NEAR(log_pochhammer(0.37, 50).log(), expected, 1e-10 * std::abs(expected));
}

TEST(LogPochhammer, StepIdentity) {
  for (double x : {0.1, 1.0, 10.0}) {
    for (long n = 0; n < 100; ++n) {
      EXPECT_NEAR(log_pochhammer(x, n + 1).log(), log_pochhammer(x, n).log() + std::log(x + n),
                  1e-10)
          << "x=" << x << " n=" << n;
    }
  }
}

TEST(LogPochhammer, RejectsNonPositiveBase) {
  EXPECT_THROW(log_pochhammer(0.0, 2), std::domain_error);
  EXPECT_THROW(log_pochhammer(-1.5, 2), std::domain_error);
}

TEST(LogFallingFactorial, Values) {
  EXPECT_NEAR(log_falling_factorial(5, 3).log(), std::log(60.0), 1e-13);
  EXPECT_TRUE(log_falling_factorial(2, 3).is_zero());
  EXPECT_DOUBLE_EQ(log_falling_factorial(7, 0).log(), 0.0);
}

TEST(LogFallingFactorial, AgreesWithShiftedPochhammer) {
  for (long m = 1; m <= 30; ++m) {
    for (long r = 1; r <= m; ++r) {
      EXPECT_NEAR(log_falling_factorial(m, r).log(), log_pochhammer(double(m - r + 1), r).log(),
                  1e-12);
    }
  }
}

TEST(LogSumExp, Basics) {
  std::vector<LogValue> two{LogValue::one(), LogValue::one()};
  EXPECT_NEAR(log_sum_exp(two).log(), std::log(2.0), 1e-15);
  EXPECT_TRUE(log_sum_exp({}).is_zero());
}

TEST(LogSumExp, NoUnderflowForTinyTerms) {
  std::vector<LogValue> tiny{LogValue::from_log(std::log(1e-300)),
                             LogValue::from_log(std::log(1e-300))};
  long double expected = std::log(2.0L) + std::log(1e-300L);
  LogValue s = log_sum_exp(tiny);
  ASSERT_FALSE(s.is_zero());
  EXPECT_NEAR(s.log(), static_cast<double>(expected), 1e-12);
}

TEST(LogSumExp, PermutationInvariant) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-700.0, 700.0);
  std::vector<LogValue> terms;
  for (int i = 0; i < 200; ++i) terms.push_back(LogValue::from_log(u(rng)));
  double base = log_sum_exp(terms).log();
  for (int k = 0; k < 20; ++k) {
    std::shuffle(terms.begin(), terms.end(), rng);
    EXPECT_NEAR(log_sum_exp(terms).log(), base, 1e-12 * std::abs(base));
    LogSum acc;
    for (auto t : terms) acc.add(t);
    EXPECT_NEAR(acc.result().log(), base, 1e-12 * std::abs(base));
  }
}

TEST(LogValue, ArithmeticAndZero) {
  LogValue a = LogValue::from_linear(3.0), b = LogValue::from_linear(4.0);
  EXPECT_NEAR((a + b).value(), 7.0, 1e-14);
  EXPECT_NEAR((a * b).value(), 12.0, 1e-13);
  EXPECT_NEAR((b / a).value(), 4.0 / 3.0, 1e-15);
  EXPECT_TRUE((a * LogValue::zero()).is_zero());
  EXPECT_EQ((LogValue::zero() + a).log(), a.log());
  EXPECT_EQ(LogValue::zero().value(), 0.0);
  EXPECT_THROW(LogValue::from_linear(-1.0), std::domain_error);
  EXPECT_THROW(a / LogValue::zero(), std::domain_error);
}

TEST(LogBinomial, OutsideRangeIsZero) {
  EXPECT_TRUE(log_binomial(3, 4).is_zero());
  EXPECT_TRUE(log_binomial(3, -1).is_zero());
  EXPECT_NEAR(log_binomial(10, 3).value(), 120.0, 1e-10);
}

}  // namespace
}  // namespace vecfdp
