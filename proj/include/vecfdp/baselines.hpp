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

// Good-Turing style estimates of the probability that the next pair of
// draws reveals a new shared species, and the true value for a known
// population.

#ifndef VECFDP_BASELINES_HPP_
#define VECFDP_BASELINES_HPP_

#include <vector>

#include "vecfdp/abundance.hpp"

namespace vecfdp {

struct FrequencyCounts {
  long f_1plus = 0;  // once in group 1, at least once in group 2
  long f_plus1 = 0;  // once in group 2, at least once in group 1
  long f_11 = 0;     // once in both
};

FrequencyCounts frequency_counts(const AbundanceTable& table);

// Raw value; `exceeds_one` is set instead of clamping.
struct BaselineEstimate {
  double value = 0;
  bool exceeds_one = false;
};

// Needs n1 == n2.
BaselineEstimate yue_estimator(const FrequencyCounts& f, long n1, long n2);
BaselineEstimate chao_shared_estimator(const FrequencyCounts& f, long n1, long n2);

// p1, p2: population proportions; seen1, seen2: sample counts per population
// species (same indexing).
double true_discovery_prob(const std::vector<double>& p1, const std::vector<double>& p2,
                           const std::vector<long>& seen1, const std::vector<long>& seen2);

}  // namespace vecfdp

#endif  // VECFDP_BASELINES_HPP_
