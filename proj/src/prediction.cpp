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

#include "vecfdp/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vecfdp/errors.hpp"

namespace vecfdp {

namespace {

void check_query(const PredictionQuery& q) {
  if (q.m1 < 0 || q.m2 < 0) throw std::domain_error("future sample sizes must be >= 0");
}

// gamma_j r_j + n_j
double local_rho(const InSampleCounts& c, int group, const Model& model) {
  return group == 1 ? model.gamma(1) * c.r1 + c.n1 : model.gamma(2) * c.r2 + c.n2;
}

LogValue lin(double x) { return LogValue::from_linear(x); }

}  // namespace

PmfTable<1> posterior_m_pmf(const ObservedState& state, const Model& model, long cap) {
  const auto& c = state.counts;
  const auto& p = model.params();
  const auto& prior = p.prior;
  LogValue vr = model.v(c.n1, c.n2, c.r);
  if (vr.is_zero()) throw std::domain_error("posterior_m_pmf: observed state has zero probability");
  auto term = [&](long m) {
    LogValue t = log_falling_factorial(m, c.r) * prior.log_pmf(m);
    if (t.is_zero()) return t;
    double dm = static_cast<double>(m);
    return t / (log_pochhammer(p.gamma1 * dm, c.n1) * log_pochhammer(p.gamma2 * dm, c.n2));
  };
  PmfTable<1> out;
  long m = std::max({c.r, prior.min_support(), 1L});
  std::optional<long> hi = prior.max_support();
  const double log_tol = std::log(model.options().tol);
  const long guard = prior.mode() + c.r;
  LogSum partial;
  int small = 0;
  for (long count = 0;; ++m, ++count) {
    if (hi && m > *hi) break;
    if (count >= cap) {
      throw ConvergenceError("posterior of M*: support cap of " + std::to_string(cap) +
                             " points reached before the tail fell below tolerance");
    }
    LogValue t = term(m);
    if (!t.is_zero()) out.add({m - c.r}, t / vr);
    partial.add(t);
    if (!hi) {
      small = (t.is_zero() || t.log() < log_tol + partial.result().log()) ? small + 1 : 0;
      if (small >= model.options().patience && m > guard) break;
    }
  }
  return out;
}

double posterior_m_mean(const ObservedState& state, const Model& model) {
  const auto& c = state.counts;
  return (model.v(c.n1, c.n2, c.r + 1) / model.v(c.n1, c.n2, c.r)).value();
}

double posterior_m_mean_asymptotic(const ObservedState& state, const ModelParams& params) {
  const auto& c = state.counts;
  if (c.r < 1 || c.n1 < 1 || c.n2 < 1) {
    throw std::domain_error("asymptotic posterior mean needs r, n1, n2 >= 1");
  }
  const double g1 = params.gamma1, g2 = params.gamma2, r = static_cast<double>(c.r);
  LogValue qr = params.prior.log_pmf(c.r);
  LogValue qr1 = params.prior.log_pmf(c.r + 1);
  if (qr.is_zero()) throw std::domain_error("prior has no mass at r");
  if (qr1.is_zero()) return 0.0;
  double l = std::log(r + 1.0) + qr1.log() - qr.log() + log_rising(g1 * r, g1).log() +
             log_rising(g2 * r, g2).log() - g1 * std::log(double(c.n1)) -
             g2 * std::log(double(c.n2));
  return std::exp(l);
}

PmfTable<3> posterior_joint_new(const ObservedState& state, const PredictionQuery& query,
                                const Model& model) {
  check_query(query);
  const auto& c = state.counts;
  const long m1 = query.m1, m2 = query.m2;
  auto row1 = model.noncentral_row(1, m1, local_rho(c, 1, model));
  auto row2 = model.noncentral_row(2, m2, local_rho(c, 2, model));
  LogValue vr = model.v(c.n1, c.n2, c.r);
  PmfTable<3> out;
  for (long k1 = 0; k1 <= m1; ++k1) {
    for (long k2 = 0; k2 <= m2; ++k2) {
      LogValue outer = row1[k1] * row2[k2] / vr;
      if (outer.is_zero()) continue;
      LogValue kf = log_factorial(k1) * log_factorial(k2);
      for (long k = 0; k <= k1 + k2; ++k) {
        LogSum inner;
        for (long ss = 0; ss <= k; ++ss) {
          for (long k1s = 0; k1s <= k - ss; ++k1s) {
            long k2s = k - ss - k1s;
            long s12 = k2 + k1s - k;
            long s21 = k1 - k1s - ss;
            if (s12 < 0 || s21 < 0 || s12 > c.r1_star || s21 > c.r2_star) continue;
            inner.add(kf / (log_factorial(ss) * log_factorial(k1s) * log_factorial(k2s)) *
                      log_binomial(c.r1_star, s12) * log_binomial(c.r2_star, s21));
          }
        }
        LogValue in = inner.result();
        if (in.is_zero()) continue;
        out.add({k, k1, k2}, model.v(c.n1 + m1, c.n2 + m2, c.r + k) * outer * in);
      }
    }
  }
  return out;
}

PmfTable<1> posterior_marginal_global_new(const ObservedState& state,
                                          const PredictionQuery& query, const Model& model) {
  check_query(query);
  const auto& c = state.counts;
  const long m1 = query.m1, m2 = query.m2;
  auto row1 = model.noncentral_row(1, m1, model.gamma(1) * c.r + c.n1);
  auto row2 = model.noncentral_row(2, m2, model.gamma(2) * c.r + c.n2);
  LogValue vr = model.v(c.n1, c.n2, c.r);
  PmfTable<1> out;
  for (long k = 0; k <= m1 + m2; ++k) {
    LogSum sum;
    for (long k1s = 0; k1s <= k; ++k1s) {
      for (long k2s = 0; k2s <= k - k1s; ++k2s) {
        long ss = k - k1s - k2s;
        if (k1s + ss > m1 || k2s + ss > m2) continue;
        sum.add(log_factorial(k1s + ss) * log_factorial(k2s + ss) /
                (log_factorial(k1s) * log_factorial(k2s) * log_factorial(ss)) *
                row1[k1s + ss] * row2[k2s + ss]);
      }
    }
    LogValue s = sum.result();
    if (!s.is_zero()) out.add({k}, model.v(c.n1 + m1, c.n2 + m2, c.r + k) / vr * s);
  }
  return out;
}

PmfTable<1> posterior_local_new(int group, const ObservedState& state, long m,
                                const Model& model) {
  if (m < 0) throw std::domain_error("future sample size must be >= 0");
  const auto& c = state.counts;
  const long n = group == 1 ? c.n1 : c.n2;
  const long rj = group == 1 ? c.r1 : c.r2;
  auto row = model.noncentral_row(group, m, local_rho(c, group, model));
  LogValue base = model.v_single(group, n, rj);
  PmfTable<1> out;
  for (long k = 0; k <= m; ++k) {
    LogValue p = model.v_single(group, n + m, rj + k) / base * row[k];
    if (!p.is_zero()) out.add({k}, p);
  }
  return out;
}

PmfTable<1> shared_pmf(const ObservedState& state, const PredictionQuery& query,
                       const Model& model) {
  PmfTable<1> out;
  PmfTable<3> joint = posterior_joint_new(state, query, model);
  for (const auto& [key, p] : joint.entries()) {
    out.add({key[1] + key[2] - key[0]}, p);
  }
  return out;
}

double shared_coverage_prob(const ObservedState& state, const PredictionQuery& query,
                            const Model& model) {
  check_query(query);
  const auto& c = state.counts;
  auto row1 = model.noncentral_row(1, query.m1, local_rho(c, 1, model));
  auto row2 = model.noncentral_row(2, query.m2, local_rho(c, 2, model));
  LogValue vr = model.v(c.n1, c.n2, c.r);
  LogSum sum;
  for (long k1 = 0; k1 <= query.m1; ++k1) {
    for (long k2 = 0; k2 <= query.m2; ++k2) {
      if (row1[k1].is_zero() || row2[k2].is_zero()) continue;
      sum.add(model.v(c.n1 + query.m1, c.n2 + query.m2, c.r + k1 + k2) * row1[k1] * row2[k2]);
    }
  }
  return (sum.result() / vr).value();
}

PmfTable<1> one_step_shared_pmf(const ObservedState& state, const Model& model) {
  const auto& c = state.counts;
  const double g1 = model.gamma(1), g2 = model.gamma(2);
  const double rho1 = local_rho(c, 1, model), rho2 = local_rho(c, 2, model);
  LogValue vr = model.v(c.n1, c.n2, c.r);
  LogValue v0 = model.v(c.n1 + 1, c.n2 + 1, c.r) / vr;
  LogValue v1 = model.v(c.n1 + 1, c.n2 + 1, c.r + 1) / vr;
  LogValue v2 = model.v(c.n1 + 1, c.n2 + 1, c.r + 2) / vr;
  const double rs1 = static_cast<double>(c.r1_star), rs2 = static_cast<double>(c.r2_star);
  PmfTable<1> out;
  out.add({0}, v0 * lin(rho1 * rho2) + v1 * lin(g1 * rho2 + g2 * rho1) + v2 * lin(g1 * g2));
  // The +1 counts a single brand-new species drawn by both groups.
  out.add({1}, v0 * lin(rs2 * g1 * rho2 + rs1 * g2 * rho1) + v1 * lin(g1 * g2 * (rs1 + rs2 + 1)));
  out.add({2}, v0 * lin(g1 * g2 * rs1 * rs2));
  return out;
}

double one_step_discovery_prob(const ObservedState& state, const Model& model) {
  const auto& c = state.counts;
  const double g1 = model.gamma(1), g2 = model.gamma(2);
  const double rho1 = local_rho(c, 1, model), rho2 = local_rho(c, 2, model);
  LogValue vr = model.v(c.n1, c.n2, c.r);
  double a = (model.v(c.n1 + 1, c.n2 + 1, c.r) / vr).value() * rho1 * rho2;
  double b = (model.v(c.n1 + 1, c.n2 + 1, c.r + 1) / vr).value() * (g1 * rho2 + g2 * rho1);
  double d = (model.v(c.n1 + 1, c.n2 + 1, c.r + 2) / vr).value() * g1 * g2;
  return 1.0 - a - b - d;
}

PairProbs predictive_pair_probs(const ObservedState& state, const Model& model) {
  const auto& c = state.counts;
  const double g1 = model.gamma(1), g2 = model.gamma(2);
  const double q1old = c.n1 + g1 * c.r, q2old = c.n2 + g2 * c.r;
  LogValue v0 = model.v(c.n1 + 1, c.n2 + 1, c.r);
  LogValue v1 = model.v(c.n1 + 1, c.n2 + 1, c.r + 1);
  LogValue v2 = model.v(c.n1 + 1, c.n2 + 1, c.r + 2);
  LogValue oo = v0 * lin(q1old * q2old);
  LogValue no = v1 * lin(g1 * q2old);
  LogValue on = v1 * lin(q1old * g2);
  LogValue nn = (v1 + v2) * lin(g1 * g2);
  LogValue total = oo + no + on + nn;
  PairProbs out;
  out.old_old = (oo / total).value();
  out.new_old = (no / total).value();
  out.old_new = (on / total).value();
  out.new_new = (nn / total).value();
  out.total_over_v = (total / model.v(c.n1, c.n2, c.r)).value();
  out.total_over_v_next = (total / v0).value();
  return out;
}

NewSpeciesMoments expected_new_from_joint(const ObservedState& state,
                                          const PredictionQuery& query, const Model& model) {
  PmfTable<3> joint = posterior_joint_new(state, query, model);
  NewSpeciesMoments out;
  out.k = joint.mean(0);
  out.k1 = joint.mean(1);
  out.k2 = joint.mean(2);
  out.s = out.k1 + out.k2 - out.k;
  return out;
}

NewSpeciesMoments expected_new_by_mixture(const ObservedState& state,
                                          const PredictionQuery& query, const Model& model) {
  check_query(query);
  const auto& c = state.counts;
  const double g1 = model.gamma(1), g2 = model.gamma(2);
  // Probability that one given species with prior weight gamma_j and no
  // observations in group j is missed by all m_j future draws there.
  auto missed = [](double g, double big_n, long n, long m) {
    if (m == 0) return 1.0;
    double a = g * big_n + static_cast<double>(n);
    if (a - g <= 0.0) return 0.0;  // the only species, certain to be drawn
    return std::exp(log_pochhammer(a - g, m).log() - log_pochhammer(a, m).log());
  };
  NewSpeciesMoments out;
  PmfTable<1> post = posterior_m_pmf(state, model);
  for (const auto& [key, p] : post.entries()) {
    double w = p.value();
    double big_n = static_cast<double>(c.r + key[0]);
    double p1 = missed(g1, big_n, c.n1, query.m1);
    double p2 = missed(g2, big_n, c.n2, query.m2);
    out.k1 += w * (big_n - c.r1) * (1.0 - p1);
    out.k2 += w * (big_n - c.r2) * (1.0 - p2);
    out.k += w * static_cast<double>(key[0]) * (1.0 - p1 * p2);
  }
  out.s = out.k1 + out.k2 - out.k;
  return out;
}

NewSpeciesMoments expected_new(const ObservedState& state, const PredictionQuery& query,
                               const Model& model) {
  check_query(query);
  if (query.m1 + query.m2 == 0) return {};
  if (query.m1 + query.m2 <= kJointMomentLimit) return expected_new_from_joint(state, query, model);
  return expected_new_by_mixture(state, query, model);
}

std::vector<CurveRow> extrapolation_curves(const ObservedState& state, const Model& model,
                                           const std::vector<PredictionQuery>& grid) {
  std::vector<CurveRow> rows;
  rows.reserve(grid.size());
  for (const auto& q : grid) {
    CurveRow row;
    row.m1 = q.m1;
    row.m2 = q.m2;
    NewSpeciesMoments e = expected_new(state, q, model);
    row.expected_k = e.k;
    row.expected_s = e.s;
    row.coverage = shared_coverage_prob(state, q, model);
    rows.push_back(row);
  }
  return rows;
}

std::vector<PredictionQuery> diagonal_grid(long m1, long m2, long step) {
  if (m1 < 0 || m2 < 0) throw std::domain_error("grid bounds must be >= 0");
  if (step < 1) throw std::domain_error("grid step must be >= 1");
  std::vector<PredictionQuery> grid;
  long top = std::max(m1, m2);
  for (long i = 0;; i += step) {
    grid.push_back({std::min(i, m1), std::min(i, m2)});
    if (i >= top) break;
    if (i + step > top) i = top - step;
  }
  return grid;
}

}  // namespace vecfdp
