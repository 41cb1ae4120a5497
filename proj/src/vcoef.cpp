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

#include "vecfdp/vcoef.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace vecfdp {

void ModelParams::validate() const {
  if (!(gamma1 > 0.0) || !(gamma2 > 0.0) || std::isinf(gamma1) || std::isinf(gamma2)) {
    throw std::domain_error("gamma1 and gamma2 must be positive and finite");
  }
}

LogValue log_v(long n1, long n2, long r, const ModelParams& params, const SeriesOptions& opts) {
  params.validate();
  if (n1 < 0 || n2 < 0) throw std::domain_error("log_v: negative sample size");
  if (r < 0) throw std::domain_error("log_v: invalid r");
  const double g1 = params.gamma1, g2 = params.gamma2;
  auto term = [&](long m) {
    LogValue t = log_falling_factorial(m, r) * params.prior.log_pmf(m);
    if (t.is_zero()) return t;
    double dm = static_cast<double>(m);
    return t / (log_pochhammer(g1 * dm, n1) * log_pochhammer(g2 * dm, n2));
  };
  return sum_prior_series(params.prior, std::max(r, 1L), params.prior.mode() + r, term, opts);
}

LogValue log_v_single(long n, long r, double gamma, const MPrior& prior,
                      const SeriesOptions& opts) {
  return log_v(n, 0, r, ModelParams{gamma, gamma, prior}, opts);
}

double check_recurrence(long n1, long n2, long r, const ModelParams& params,
                        const SeriesOptions& opts) {
  if (r < 1) throw std::domain_error("check_recurrence: r must be positive");
  auto v = [&](long a, long b, long s) { return log_v(a, b, s, params, opts); };
  LogValue lhs = v(n1, n2, r);
  if (lhs.is_zero()) throw std::domain_error("check_recurrence: V is zero");
  const double rr = static_cast<double>(r);
  LogValue gg = LogValue::from_linear(params.gamma1 * params.gamma2);
  // Positive part of the right-hand side, then the one subtracted term.
  LogValue pos = gg * (LogValue::from_linear(rr * rr) * v(n1 + 1, n2 + 1, r) +
                       LogValue::from_linear(2 * rr + 1) * v(n1 + 1, n2 + 1, r + 1) +
                       v(n1 + 1, n2 + 1, r + 2));
  if (n1 > 0) pos += LogValue::from_linear(double(n1)) * v(n1 + 1, n2, r);
  if (n2 > 0) pos += LogValue::from_linear(double(n2)) * v(n1, n2 + 1, r);
  LogValue neg = LogValue::zero();
  if (n1 > 0 && n2 > 0) neg = LogValue::from_linear(double(n1) * double(n2)) * v(n1 + 1, n2 + 1, r);
  double rhs_over_lhs = std::exp(pos.log() - lhs.log()) -
                        (neg.is_zero() ? 0.0 : std::exp(neg.log() - lhs.log()));
  return std::abs(1.0 - rhs_over_lhs);
}

LogValue log_v_asymptotic(long n1, long n2, long r, const ModelParams& params) {
  params.validate();
  if (r < 1) throw std::domain_error("log_v_asymptotic: r must be positive");
  const auto& q = params.prior;
  LogValue qr = q.log_pmf(r);
  if (qr.is_zero()) throw std::domain_error("log_v_asymptotic: prior has no mass at r");
  const double g1 = params.gamma1, g2 = params.gamma2, dr = static_cast<double>(r);
  LogValue lead = log_factorial(r) * qr / (log_pochhammer(g1 * dr, n1) * log_pochhammer(g2 * dr, n2));
  LogValue qr1 = q.log_pmf(r + 1);
  if (qr1.is_zero()) return lead;
  double corr_log = -g1 * std::log(double(n1)) - g2 * std::log(double(n2)) + std::log(dr + 1.0) +
                    log_rising(g1 * dr, g1).log() + log_rising(g2 * dr, g2).log() + qr1.log() -
                    qr.log();
  return lead * LogValue::from_log(std::log1p(std::exp(corr_log)));
}

LogValue VCache::get(long n1, long n2, long r) const {
  const std::array<long, 3> key{n1, n2, r};
  {
    std::shared_lock lock(mu_);
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
  }
  // Computed outside the lock; a racing duplicate stores the same value.
  LogValue v = log_v(n1, n2, r, params_, opts_);
  std::unique_lock lock(mu_);
  values_.emplace(key, v);
  return v;
}

std::size_t VCache::size() const {
  std::shared_lock lock(mu_);
  return values_.size();
}

}  // namespace vecfdp
