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

#include "vecfdp/baselines.hpp"

#include <gtest/gtest.h>

#include <random>

#include "vecfdp/errors.hpp"

namespace vecfdp {
namespace {

AbundanceTable make(std::initializer_list<std::tuple<const char*, long, long>> rows) {
  AbundanceTable t;
  for (const auto& [label, a, b] : rows) t.add(label, a, b);
  return t;
}

TEST(FrequencyCounts, HandCount) {
  FrequencyCounts f = frequency_counts(make({{"a", 1, 1}, {"b", 2, 0}, {"c", 1, 3}, {"d", 0, 1}}));
  EXPECT_EQ(f.f_1plus, 2);
  EXPECT_EQ(f.f_plus1, 1);
  EXPECT_EQ(f.f_11, 1);
}

TEST(FrequencyCounts, DisjointAndAbundant) {
  FrequencyCounts d = frequency_counts(make({{"a", 1, 0}, {"b", 0, 1}}));
  EXPECT_EQ(d.f_1plus + d.f_plus1 + d.f_11, 0);
  FrequencyCounts a = frequency_counts(make({{"a", 2, 3}, {"b", 4, 2}}));
  EXPECT_EQ(a.f_1plus + a.f_plus1 + a.f_11, 0);
}

TEST(Yue, OverflowIsFlagged) {
  FrequencyCounts f = frequency_counts(make({{"a", 1, 1}, {"b", 2, 1}, {"c", 1, 2}}));
  EXPECT_EQ(f.f_1plus, 2);
  EXPECT_EQ(f.f_plus1, 2);
  EXPECT_EQ(f.f_11, 1);
  BaselineEstimate y = yue_estimator(f, 4, 4);
  EXPECT_DOUBLE_EQ(y.value, 1.25);
  EXPECT_TRUE(y.exceeds_one);
  EXPECT_EQ(yue_estimator(FrequencyCounts{}, 3, 3).value, 0.0);
  EXPECT_THROW(yue_estimator(f, 4, 5), InputError);
}

TEST(ChaoSh, HandValues) {
  FrequencyCounts f = frequency_counts(make({{"a", 1, 1}, {"b", 2, 0}, {"c", 1, 3}, {"d", 0, 1}}));
  EXPECT_DOUBLE_EQ(chao_shared_estimator(f, 4, 5).value, 0.75);
  EXPECT_EQ(chao_shared_estimator(FrequencyCounts{}, 4, 5).value, 0.0);
  BaselineEstimate one = chao_shared_estimator(frequency_counts(make({{"a", 1, 1}})), 1, 1);
  EXPECT_DOUBLE_EQ(one.value, 3.0);
  EXPECT_TRUE(one.exceeds_one);
}

TEST(Baselines, YueMinusChaoIsSingletonTerm) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(0, 3);
  for (int rep = 0; rep < 200; ++rep) {
    AbundanceTable t;
    long n1 = 0, n2 = 0;
    for (int i = 0; i < 8; ++i) {
      long a = c(rng), b = c(rng);
      if (a + b == 0) continue;
      t.add("s" + std::to_string(i), a, b);
      n1 += a;
      n2 += b;
    }
    long n = std::max(n1, n2);
    if (n == 0) continue;
    FrequencyCounts f = frequency_counts(t);
    double diff = yue_estimator(f, n, n).value - chao_shared_estimator(f, n, n).value;
    EXPECT_NEAR(diff, f.f_11 * (1.0 / n - 1.0 / (double(n) * n)), 1e-14);
    EXPECT_GE(diff, -1e-15);
  }
}

TEST(TrueProbability, Cases) {
  std::vector<double> p1{0.5, 0.3, 0.2}, p2{0.2, 0.3, 0.5};
  EXPECT_NEAR(true_discovery_prob(p1, p2, {0, 0, 0}, {0, 0, 0}), 0.1 + 0.09 + 0.1, 1e-15);
  EXPECT_EQ(true_discovery_prob(p1, p2, {1, 2, 1}, {3, 1, 1}), 0.0);
  EXPECT_NEAR(true_discovery_prob(p1, p2, {1, 0, 0}, {1, 0, 0}), 0.3 * 0.3 + 0.2 * 0.5, 1e-15);
  EXPECT_THROW(true_discovery_prob(p1, p2, {1, 0}, {1, 0, 0}), std::invalid_argument);
}

// Seeing a species in one group can raise the chance of a shared discovery,
// but once everything is shared the probability is zero.
TEST(TrueProbability, ZeroAfterEverySpeciesIsShared) {
  std::vector<double> p1{0.4, 0.3, 0.2, 0.1}, p2{0.1, 0.2, 0.3, 0.4};
  EXPECT_GT(true_discovery_prob(p1, p2, {1, 0, 0, 0}, {0, 0, 0, 0}),
            true_discovery_prob(p1, p2, {0, 0, 0, 0}, {0, 0, 0, 0}));
  std::vector<long> s1(4, 0), s2(4, 0);
  std::mt19937_64 rng(3);
  std::discrete_distribution<int> d1(p1.begin(), p1.end()), d2(p2.begin(), p2.end());
  for (int i = 0; i < 2000; ++i) {
    ++s1[d1(rng)];
    ++s2[d2(rng)];
  }
  EXPECT_EQ(true_discovery_prob(p1, p2, s1, s2), 0.0);
}

}  // namespace
}  // namespace vecfdp
