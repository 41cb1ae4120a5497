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

// Prior-predictive laws of the in-sample counts K (global distinct),
// K1, K2 (local distinct) and S (shared) for samples of sizes n1, n2.

#ifndef VECFDP_INSAMPLE_HPP_
#define VECFDP_INSAMPLE_HPP_

#include "vecfdp/model.hpp"
#include "vecfdp/pmf.hpp"

namespace vecfdp {

// Keys (r, r1, r2). Needs n1, n2 >= 1.
PmfTable<3> prior_joint(long n1, long n2, const Model& model);

// Keys (r).
PmfTable<1> prior_marginal_global(long n1, long n2, const Model& model);

// Keys (r, t).
PmfTable<2> prior_joint_global_shared(long n1, long n2, const Model& model);

// Keys (t).
PmfTable<1> prior_marginal_shared(long n1, long n2, const Model& model);

// Keys (r_j), one-group law for the given group.
PmfTable<1> prior_local(int group, long n, const Model& model);

// Correlation between P1(A) and P2(A) for any measurable A.
double correlation(const ModelParams& params, const SeriesOptions& opts = {});

struct InSampleMoments {
  double k1 = 0, k2 = 0, k = 0, s = 0;
  double s_direct = 0;  // E[S] summed directly over the joint
};

InSampleMoments expected_in_sample(long n1, long n2, const Model& model);

}  // namespace vecfdp

#endif  // VECFDP_INSAMPLE_HPP_
