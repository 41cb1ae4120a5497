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

#include "vecfdp/insample.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "vecfdp/simulate.hpp"

namespace vecfdp {
namespace {

ModelParams poisson(double lambda, double g1, double g2) {
  return ModelParams{g1, g2, MPrior::one_shifted_poisson(lambda)};
}

std::vector<ModelParams> grid() {
  std::vector<ModelParams> out;
  for (double g1 : {0.3, 1.0, 3.0}) {
    for (double g2 : {0.3, 1.0, 3.0}) {
      for (double lambda : {0.5, 2.0, 8.0}) out.push_back(poisson(lambda, g1, g2));
    }
  }
  return out;
}

TEST(PriorJoint, OneObservationPerGroup) {
  Model model(poisson(2.0, 0.7, 1.9));
  PmfTable<3> joint = prior_joint(1, 1, model);
  ASSERT_EQ(joint.size(), 2u);
  const double gg = 0.7 * 1.9;
  EXPECT_NEAR(joint.prob({1, 1, 1}), model.v(1, 1, 1).value() * gg, 1e-14);
  EXPECT_NEAR(joint.prob({2, 1, 1}), model.v(1, 1, 2).value() * gg, 1e-14);
  EXPECT_NEAR(joint.total(), 1.0, 1e-12);
  InSampleMoments m = expected_in_sample(1, 1, model);
  EXPECT_NEAR(m.k, joint.prob({1, 1, 1}) + 2 * joint.prob({2, 1, 1}), 1e-14);
}

TEST(PriorJoint, SupportRespectsConstraints) {
  Model model(poisson(2.0, 1.0, 1.0));
  PmfTable<3> joint = prior_joint(4, 3, model);
  for (const auto& [key, p] : joint.entries()) {
    long r = key[0], r1 = key[1], r2 = key[2];
    EXPECT_LE(r, r1 + r2);
    EXPECT_LE(r1, std::min(r, 4L));
    EXPECT_LE(r2, std::min(r, 3L));
  }
}

TEST(PriorJoint, NormalizedOnGrid) {
  for (const auto& p : grid()) {
    Model model(p);
    for (long n1 = 1; n1 <= 6; ++n1) {
      for (long n2 = 1; n2 <= 6; ++n2) {
        EXPECT_NEAR(prior_joint(n1, n2, model).total(), 1.0, 1e-8);
        EXPECT_NEAR(prior_marginal_global(n1, n2, model).total(), 1.0, 1e-8);
        EXPECT_NEAR(prior_joint_global_shared(n1, n2, model).total(), 1.0, 1e-8);
        EXPECT_NEAR(prior_marginal_shared(n1, n2, model).total(), 1.0, 1e-8);
      }
    }
  }
}

TEST(PriorJoint, MatchesEnumerationOracle) {
  for (auto p : {poisson(0.5, 0.3, 3.0), poisson(2.0, 1.0, 1.0), poisson(8.0, 3.0, 0.3),
                 ModelParams{0.5, 1.5, MPrior::point_mass(4)}}) {
    Model model(p);
    for (long n1 = 1; n1 <= 3; ++n1) {
      for (long n2 = 1; n2 <= 3; ++n2) {
        EXPECT_LT(max_abs_diff(prior_joint(n1, n2, model), bruteforce_prior(n1, n2, model)),
                  1e-10);
      }
    }
  }
}

TEST(Marginals, ConsistentWithJoint) {
  for (auto p : {poisson(0.5, 0.3, 1.0), poisson(8.0, 3.0, 0.3)}) {
    Model model(p);
    for (long n1 = 1; n1 <= 5; ++n1) {
      for (long n2 = 1; n1 + n2 <= 6; ++n2) {
        PmfTable<3> joint = prior_joint(n1, n2, model);
        EXPECT_LT(max_abs_diff(prior_marginal_global(n1, n2, model), joint.marginal<1>({0})),
                  1e-10);
        PmfTable<2> rt;
        for (const auto& [k, v] : joint.entries()) rt.add({k[0], k[1] + k[2] - k[0]}, v);
        PmfTable<2> direct = prior_joint_global_shared(n1, n2, model);
        EXPECT_LT(max_abs_diff(direct, rt), 1e-10);
        EXPECT_LT(max_abs_diff(direct.marginal<1>({0}), prior_marginal_global(n1, n2, model)),
                  1e-10);
        EXPECT_LT(max_abs_diff(prior_marginal_shared(n1, n2, model), rt.marginal<1>({1})), 1e-10);
        EXPECT_LT(max_abs_diff(prior_local(1, n1, model), joint.marginal<1>({1})), 1e-10);
        EXPECT_LT(max_abs_diff(prior_local(2, n2, model), joint.marginal<1>({2})), 1e-10);
      }
    }
  }
}

TEST(Marginals, SharedSupportAndHandValue) {
  Model model(poisson(2.0, 0.5, 2.0));
  PmfTable<2> rt32 = prior_joint_global_shared(3, 2, model);
  for (const auto& [k, v] : rt32.entries()) {
    EXPECT_LE(k[1], std::min({k[0], 3L, 2L}));
  }
  EXPECT_NEAR(prior_joint_global_shared(1, 1, model).prob({1, 1}),
              model.v(1, 1, 1).value() * 0.5 * 2.0, 1e-14);
  PmfTable<2> rt = prior_joint_global_shared(3, 3, model);
  double t0 = 0;
  for (const auto& [k, v] : rt.entries()) t0 += k[1] == 0 ? v.value() : 0.0;
  EXPECT_NEAR(prior_marginal_shared(3, 3, model).prob({0}), t0, 1e-14);
}

TEST(Marginals, GlobalReducesToOneGroup) {
  Model model(poisson(3.0, 0.8, 2.0));
  for (long n = 1; n <= 6; ++n) {
    EXPECT_LT(max_abs_diff(prior_marginal_global(n, 0, model), prior_local(1, n, model)), 1e-12);
    EXPECT_LT(max_abs_diff(prior_marginal_global(0, n, model), prior_local(2, n, model)), 1e-12);
  }
}

TEST(Local, NormalizedAndTrivialCase) {
  for (const auto& p : grid()) {
    Model model(p);
    for (long n = 1; n <= 10; ++n) {
      EXPECT_NEAR(prior_local(1, n, model).total(), 1.0, 1e-10);
      EXPECT_NEAR(prior_local(2, n, model).total(), 1.0, 1e-10);
    }
    EXPECT_NEAR(prior_local(1, 1, model).prob({1}), 1.0, 1e-12);
  }
}

TEST(Correlation, Limits) {
  double lambda = 2.0;
  double inv = (1.0 - std::exp(-lambda)) / lambda;
  EXPECT_NEAR(correlation(poisson(lambda, 1e-6, 1e-6)), inv, 1e-4);
  EXPECT_NEAR(correlation(poisson(lambda, 1e6, 1e6)), 1.0, 1e-3);
  double prev = 0.0;
  for (double g : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    double c = correlation(poisson(lambda, g, g));
    EXPECT_GT(c, prev);
    prev = c;
  }
}

TEST(Correlation, DegenerateAndSymmetric) {
  for (double g : {0.1, 1.0, 7.0}) {
    EXPECT_NEAR(correlation(ModelParams{g, 2 * g, MPrior::point_mass(1)}), 1.0, 1e-12);
  }
  EXPECT_NEAR(correlation(poisson(3.0, 0.4, 5.0)), correlation(poisson(3.0, 5.0, 0.4)), 1e-15);
}

TEST(Moments, LinearityAndMonteCarlo) {
  ModelParams p = poisson(2.0, 0.8, 1.5);
  Model model(p);
  InSampleMoments m = expected_in_sample(3, 4, model);
  EXPECT_NEAR(m.s, m.s_direct, 1e-10);
  const long draws = 20000;
  double sum = 0, sum2 = 0;
  for (long i = 0; i < draws; ++i) {
    double k = static_cast<double>(generative_vecfdp_sample(p, 3, 4, 1000 + i).summary().r);
    sum += k;
    sum2 += k * k;
  }
  double mean = sum / draws;
  double se = std::sqrt((sum2 / draws - mean * mean) / draws);
  EXPECT_LT(std::abs(mean - m.k), 3 * se);
}

}  // namespace
}  // namespace vecfdp
