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

#include "vecfdp/simulate.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "vecfdp/insample.hpp"
#include "vecfdp/prediction.hpp"

namespace vecfdp {
namespace {

TEST(Population, GeometricWeights) {
  SyntheticPopulation pop = generate_population(3, 0.5, 0.5, 9);
  std::vector<double> w = pop.p1;
  std::sort(w.rbegin(), w.rend());
  EXPECT_NEAR(w[0], 4.0 / 7, 1e-15);
  EXPECT_NEAR(w[1], 2.0 / 7, 1e-15);
  EXPECT_NEAR(w[2], 1.0 / 7, 1e-15);
  SyntheticPopulation big = generate_population(60, 0.8, 0.9, 1);
  EXPECT_NEAR(std::accumulate(big.p1.begin(), big.p1.end(), 0.0), 1.0, 1e-12);
  EXPECT_NEAR(std::accumulate(big.p2.begin(), big.p2.end(), 0.0), 1.0, 1e-12);
  EXPECT_NE(big.perm1, big.perm2);
}

TEST(Population, Deterministic) {
  SyntheticPopulation a = generate_population(40, 0.8, 0.8, 5);
  SyntheticPopulation b = generate_population(40, 0.8, 0.8, 5);
  EXPECT_EQ(a.p1, b.p1);
  EXPECT_EQ(a.p2, b.p2);
  EXPECT_EQ(draw_sample(a, 100, 80, 3).counts1, draw_sample(b, 100, 80, 3).counts1);
  EXPECT_NE(draw_sample(a, 100, 80, 3).counts1, draw_sample(a, 100, 80, 4).counts1);
}

TEST(Population, SampleSizesAndPrefixes) {
  SyntheticPopulation pop = generate_population(30, 0.8, 0.7, 2);
  PopulationSample s = draw_sample(pop, 123, 45, 8);
  EXPECT_EQ(std::accumulate(s.counts1.begin(), s.counts1.end(), 0L), 123);
  EXPECT_EQ(std::accumulate(s.counts2.begin(), s.counts2.end(), 0L), 45);
  DrawSequence seq = draw_sequence(pop, 200, 200, 8);
  PopulationSample small = seq.prefix(50, 60, pop.m_true);
  PopulationSample large = seq.prefix(100, 120, pop.m_true);
  for (long i = 0; i < pop.m_true; ++i) {
    EXPECT_LE(small.counts1[i], large.counts1[i]);
    EXPECT_LE(small.counts2[i], large.counts2[i]);
  }
}

TEST(Dirichlet, MeansMatch) {
  Rng rng = make_rng(1);
  std::vector<double> shape{0.05, 0.5, 2.0, 7.45};
  std::vector<double> mean(4, 0.0);
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    auto w = sample_dirichlet(shape, rng);
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
    for (int j = 0; j < 4; ++j) mean[j] += w[j] / n;
  }
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(mean[j], shape[j] / 10.0, 0.01);
}

TEST(Prior, SampleMean) {
  Rng rng = make_rng(2);
  MPrior prior = MPrior::one_shifted_poisson(3.5);
  double mean = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) mean += static_cast<double>(sample_from_prior(prior, rng)) / n;
  EXPECT_NEAR(mean, 4.5, 0.03);
  EXPECT_EQ(sample_from_prior(MPrior::point_mass(7), rng), 7);
}

TEST(Generative, PointMassOneHasOneSharedSpecies) {
  ModelParams p{1.0, 2.0, MPrior::point_mass(1)};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    InSampleCounts c = generative_vecfdp_sample(p, 5, 3, seed).summary();
    EXPECT_EQ(c.r, 1);
    EXPECT_EQ(c.t, 1);
  }
}

TEST(Generative, MatchesPriorJoint) {
  ModelParams p{0.7, 1.8, MPrior::one_shifted_poisson(2.5)};
  Model model(p);
  for (auto [n1, n2] : {std::pair<long, long>{1, 1}, {3, 2}}) {
    PmfTable<3> exact = prior_joint(n1, n2, model);
    PmfTable<3> emp = empirical_prior_law(p, n1, n2, 200000, 31);
    EXPECT_LT(total_variation(exact, emp), 0.02) << n1 << "," << n2;
  }
}

TEST(Conditional, MatchesPosteriorJoint) {
  Model model(ModelParams{0.9, 1.4, MPrior::one_shifted_poisson(4.0)});
  AbundanceTable t;
  t.add("a", 3, 1);
  t.add("b", 1, 0);
  t.add("c", 0, 2);
  ObservedState state = t.state();
  PredictionQuery q{3, 4};
  PmfTable<3> exact = posterior_joint_new(state, q, model);
  PmfTable<3> emp = empirical_future_law(state, model, q, 200000, 17);
  EXPECT_LT(total_variation(exact, emp), 0.02);
}

TEST(Bruteforce, PriorIsNormalized) {
  Model model(ModelParams{1.3, 0.4, MPrior::one_shifted_poisson(1.5)});
  EXPECT_NEAR(bruteforce_prior(3, 3, model).total(), 1.0, 1e-12);
}

}  // namespace
}  // namespace vecfdp
