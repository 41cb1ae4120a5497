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

#include <cmath>
#include <stdexcept>

#include "vecfdp/errors.hpp"

namespace vecfdp {

FrequencyCounts frequency_counts(const AbundanceTable& table) {
  FrequencyCounts f;
  for (std::size_t i = 0; i < table.size(); ++i) {
    long a = table.counts1()[i], b = table.counts2()[i];
    if (a == 1 && b >= 1) ++f.f_1plus;
    if (b == 1 && a >= 1) ++f.f_plus1;
    if (a == 1 && b == 1) ++f.f_11;
  }
  return f;
}

BaselineEstimate yue_estimator(const FrequencyCounts& f, long n1, long n2) {
  if (n1 != n2) throw InputError("Yue estimator is defined only for n1 == n2");
  if (n1 < 1) throw InputError("Yue estimator needs n1 >= 1");
  double v = static_cast<double>(f.f_1plus + f.f_plus1 + f.f_11) / static_cast<double>(n1);
  return {v, v > 1.0};
}

BaselineEstimate chao_shared_estimator(const FrequencyCounts& f, long n1, long n2) {
  if (n1 < 1 || n2 < 1) throw InputError("ChaoSh estimator needs n1, n2 >= 1");
  const double a = static_cast<double>(n1), b = static_cast<double>(n2);
  double v = f.f_1plus / a + f.f_plus1 / b + f.f_11 / (a * b);
  return {v, v > 1.0};
}

double true_discovery_prob(const std::vector<double>& p1, const std::vector<double>& p2,
                           const std::vector<long>& seen1, const std::vector<long>& seen2) {
  const std::size_t m = p1.size();
  if (p2.size() != m || seen1.size() != m || seen2.size() != m) {
    throw std::invalid_argument("true_discovery_prob: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    bool in1 = seen1[i] > 0, in2 = seen2[i] > 0;
    if (!in1 && !in2) s += p1[i] * p2[i];
    if (!in1 && in2) s += p1[i];
    if (in1 && !in2) s += p2[i];
  }
  return s;
}

}  // namespace vecfdp
