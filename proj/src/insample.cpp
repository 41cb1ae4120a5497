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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vecfdp {

namespace {

void require_sizes(long n1, long n2, bool both) {
  if (n1 < 0 || n2 < 0) throw std::domain_error("negative sample size");
  if (both && (n1 < 1 || n2 < 1)) throw std::domain_error("both sample sizes must be >= 1");
  if (n1 + n2 < 1) throw std::domain_error("empty sample");
}

}  // namespace

PmfTable<3> prior_joint(long n1, long n2, const Model& model) {
  require_sizes(n1, n2, true);
  PmfTable<3> out;
  for (long r1 = 1; r1 <= n1; ++r1) {
    LogValue c1 = model.central_gfc(1, n1, r1) * log_factorial(r1);
    for (long r2 = 1; r2 <= n2; ++r2) {
      LogValue c12 = c1 * model.central_gfc(2, n2, r2) * log_factorial(r2);
      for (long r = std::max(r1, r2); r <= r1 + r2; ++r) {
        long t = r1 + r2 - r;
        LogValue denom = log_factorial(r - r2) * log_factorial(r - r1) * log_factorial(t);
        out.add({r, r1, r2}, model.v(n1, n2, r) * c12 / denom);
      }
    }
  }
  return out;
}

PmfTable<1> prior_marginal_global(long n1, long n2, const Model& model) {
  require_sizes(n1, n2, false);
  PmfTable<1> out;
  for (long r = 1; r <= n1 + n2; ++r) {
    LogSum sum;
    for (long z1 = 0; z1 <= r; ++z1) {
      if (r - z1 > n1) continue;
      for (long z2 = 0; z2 <= r - z1; ++z2) {
        if (r - z2 > n2) continue;
        sum.add(log_binomial(r - z1, z2) * log_factorial(r - z2) / log_factorial(z1) *
                model.central_gfc(1, n1, r - z1) * model.central_gfc(2, n2, r - z2));
      }
    }
    out.add({r}, model.v(n1, n2, r) * sum.result());
  }
  return out;
}

PmfTable<2> prior_joint_global_shared(long n1, long n2, const Model& model) {
  require_sizes(n1, n2, true);
  PmfTable<2> out;
  for (long r = 1; r <= n1 + n2; ++r) {
    LogValue v = model.v(n1, n2, r);
    for (long t = 0; t <= std::min({r, n1, n2}); ++t) {
      LogSum sum;
      for (long k1s = 0; k1s <= r - t; ++k1s) {
        if (t + k1s > n1 || r - k1s > n2) continue;
        sum.add(log_binomial(r - k1s, t) * log_factorial(t + k1s) / log_factorial(k1s) *
                model.central_gfc(1, n1, t + k1s) * model.central_gfc(2, n2, r - k1s));
      }
      LogValue p = v * sum.result();
      if (!p.is_zero()) out.add({r, t}, p);
    }
  }
  return out;
}

PmfTable<1> prior_marginal_shared(long n1, long n2, const Model& model) {
  return prior_joint_global_shared(n1, n2, model).marginal<1>({1});
}

PmfTable<1> prior_local(int group, long n, const Model& model) {
  if (n < 1) throw std::domain_error("prior_local: n must be >= 1");
  PmfTable<1> out;
  for (long r = 1; r <= n; ++r) {
    out.add({r}, model.v_single(group, n, r) * model.central_gfc(group, n, r));
  }
  return out;
}

double correlation(const ModelParams& params, const SeriesOptions& opts) {
  params.validate();
  const double g1 = params.gamma1, g2 = params.gamma2;
  double inv_m = mean_inverse(params.prior, opts);
  double a1 = mean_inverse_affine(params.prior, g1, opts);
  double a2 = mean_inverse_affine(params.prior, g2, opts);
  return inv_m / (std::sqrt((1.0 + g1) * (1.0 + g2)) * std::sqrt(a1 * a2));
}

InSampleMoments expected_in_sample(long n1, long n2, const Model& model) {
  PmfTable<3> joint = prior_joint(n1, n2, model);
  InSampleMoments m;
  m.k = joint.mean(0);
  m.k1 = joint.mean(1);
  m.k2 = joint.mean(2);
  m.s = m.k1 + m.k2 - m.k;
  m.s_direct = joint.expect([](const PmfTable<3>::Key& key) {
    return static_cast<double>(key[1] + key[2] - key[0]);
  });
  return m;
}

}  // namespace vecfdp
