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

// Posterior quantities given an observed two-group sample: the number of
// unseen species M*, and the law of new distinct (k, k1, k2) and new shared
// (s = k1 + k2 - k) species in a further sample of sizes (m1, m2).

#ifndef VECFDP_PREDICTION_HPP_
#define VECFDP_PREDICTION_HPP_

#include <vector>

#include "vecfdp/counts.hpp"
#include "vecfdp/model.hpp"
#include "vecfdp/pmf.hpp"

namespace vecfdp {

// Keys (m*). Throws ConvergenceError if more than `cap` support points are
// needed.
PmfTable<1> posterior_m_pmf(const ObservedState& state, const Model& model,
                            long cap = 1'000'000);
double posterior_m_mean(const ObservedState& state, const Model& model);
// Large-sample approximation of the posterior mean of M*.
double posterior_m_mean_asymptotic(const ObservedState& state, const ModelParams& params);

// Keys (k, k1, k2).
PmfTable<3> posterior_joint_new(const ObservedState& state, const PredictionQuery& query,
                                const Model& model);
// Keys (k).
PmfTable<1> posterior_marginal_global_new(const ObservedState& state,
                                          const PredictionQuery& query, const Model& model);
// Keys (k_j), from the one-group V coefficients of group j alone.
PmfTable<1> posterior_local_new(int group, const ObservedState& state, long m,
                                const Model& model);
// Keys (s).
PmfTable<1> shared_pmf(const ObservedState& state, const PredictionQuery& query,
                       const Model& model);

// Probability that the further sample holds no new shared species.
double shared_coverage_prob(const ObservedState& state, const PredictionQuery& query,
                            const Model& model);

// Keys (s) for m1 = m2 = 1.
PmfTable<1> one_step_shared_pmf(const ObservedState& state, const Model& model);
double one_step_discovery_prob(const ObservedState& state, const Model& model);

// Next pair of observations, one per group: old or new species in each.
struct PairProbs {
  double old_old = 0, new_old = 0, old_new = 0, new_new = 0;
  // Cell total divided by V^r_{n1,n2} and by V^r_{n1+1,n2+1}.
  double total_over_v = 0;
  double total_over_v_next = 0;
};
PairProbs predictive_pair_probs(const ObservedState& state, const Model& model);

struct NewSpeciesMoments {
  double k1 = 0, k2 = 0, k = 0, s = 0;
};
// Small queries sum the joint pmf; larger ones average closed-form
// conditional moments over the posterior of M*.
NewSpeciesMoments expected_new(const ObservedState& state, const PredictionQuery& query,
                               const Model& model);
NewSpeciesMoments expected_new_from_joint(const ObservedState& state,
                                          const PredictionQuery& query, const Model& model);
NewSpeciesMoments expected_new_by_mixture(const ObservedState& state,
                                          const PredictionQuery& query, const Model& model);

// Queries with m1 + m2 up to this size use the joint pmf in expected_new.
inline constexpr long kJointMomentLimit = 40;

struct CurveRow {
  long m1 = 0, m2 = 0;
  double expected_k = 0, expected_s = 0, coverage = 1;
};
std::vector<CurveRow> extrapolation_curves(const ObservedState& state, const Model& model,
                                           const std::vector<PredictionQuery>& grid);

// Diagonal grid (0,0), (step,step), ... capped per group at (m1, m2).
std::vector<PredictionQuery> diagonal_grid(long m1, long m2, long step);

}  // namespace vecfdp

#endif  // VECFDP_PREDICTION_HPP_
