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

// V coefficients of the two-group partition probability function:
//   V^r_{n1,n2} = sum_{m >= max(r,1)} (m)_{r down} q(m) / [(g1 m)_{n1} (g2 m)_{n2}]

#ifndef VECFDP_VCOEF_HPP_
#define VECFDP_VCOEF_HPP_

#include <array>
#include <map>
#include <shared_mutex>

#include "vecfdp/logmath.hpp"
#include "vecfdp/prior.hpp"

namespace vecfdp {

struct ModelParams {
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  MPrior prior = MPrior::one_shifted_poisson(1.0);

  double gamma(int group) const { return group == 1 ? gamma1 : gamma2; }
  void validate() const;
};

LogValue log_v(long n1, long n2, long r, const ModelParams& params,
               const SeriesOptions& opts = {});

// One-group V^r_n with concentration gamma.
LogValue log_v_single(long n, long r, double gamma, const MPrior& prior,
                      const SeriesOptions& opts = {});

// |LHS - RHS| / LHS of the recurrence linking V^r_{n1,n2} to its neighbours at
// (n1+1, n2), (n1, n2+1) and (n1+1, n2+1).
double check_recurrence(long n1, long n2, long r, const ModelParams& params,
                        const SeriesOptions& opts = {});

// Two-term large-sample expansion around the leading term m = r.
LogValue log_v_asymptotic(long n1, long n2, long r, const ModelParams& params);

class VCache {
 public:
  explicit VCache(ModelParams params, SeriesOptions opts = {})
      : params_(std::move(params)), opts_(opts) {}

  LogValue get(long n1, long n2, long r) const;
  const ModelParams& params() const { return params_; }
  const SeriesOptions& options() const { return opts_; }
  std::size_t size() const;

 private:
  ModelParams params_;
  SeriesOptions opts_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::array<long, 3>, LogValue> values_;
};

}  // namespace vecfdp

#endif  // VECFDP_VCOEF_HPP_
