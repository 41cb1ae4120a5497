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

#include "vecfdp/estimation.hpp"

#include <cmath>
#include <sstream>

#include "vecfdp/errors.hpp"

namespace vecfdp {

std::string to_string(EstimatorMode mode) {
  return mode == EstimatorMode::kPlugIn ? "plug_in" : "unbiased";
}

EstimatorMode estimator_mode_from_string(const std::string& s) {
  if (s == "plug_in") return EstimatorMode::kPlugIn;
  if (s == "unbiased") return EstimatorMode::kUnbiased;
  throw InputError("unknown estimator mode '" + s + "' (expected plug_in or unbiased)");
}

DiversityStats diversity_stats(const AbundanceTable& table, EstimatorMode mode) {
  InSampleCounts c = table.summary();
  if (c.n1 < 1 || c.n2 < 1) throw InputError("diversity_stats: a group has no observations");
  if (mode == EstimatorMode::kUnbiased && (c.n1 < 2 || c.n2 < 2)) {
    throw InputError("diversity_stats: unbiased mode needs at least two observations per group");
  }
  const double n1 = static_cast<double>(c.n1), n2 = static_cast<double>(c.n2);
  DiversityStats s;
  s.mode = mode;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double a = static_cast<double>(table.counts1()[i]);
    const double b = static_cast<double>(table.counts2()[i]);
    if (mode == EstimatorMode::kPlugIn) {
      s.ss1 += (a / n1) * (a / n1);
      s.ss2 += (b / n2) * (b / n2);
    } else {
      s.ss1 += a * (a - 1.0) / (n1 * (n1 - 1.0));
      s.ss2 += b * (b - 1.0) / (n2 * (n2 - 1.0));
    }
    s.cp += (a / n1) * (b / n2);
  }
  s.morisita = (s.ss1 + s.ss2) > 0.0 ? 2.0 * s.cp / (s.ss1 + s.ss2) : 0.0;
  return s;
}

double inverse_mean_poisson(double lambda) { return -std::expm1(-lambda) / lambda; }

double simpson_moment(double gamma, const MPrior& prior, const SeriesOptions& opts) {
  return (1.0 + gamma) * mean_inverse_affine(prior, gamma, opts);
}

namespace {

// Bisection for a decreasing f on [lo, hi] with f(lo) > target > f(hi),
// geometric midpoints.
template <class F>
double bisect_log(F&& f, double target, double lo, double hi, const SolverOptions& opts) {
  for (int it = 0; it < opts.max_iter && hi / lo - 1.0 > opts.tol; ++it) {
    double mid = std::sqrt(lo * hi);
    if (f(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

double fit_lambda(double cp, const SolverOptions& opts) {
  if (!(cp > 0.0)) throw RangeError("fit_lambda: cross-product sum must be > 0, got " + num(cp));
  if (!(cp < 1.0)) {
    throw RangeError("fit_lambda: cross-product sum must be < 1 (lambda would be <= 0), got " +
                     num(cp));
  }
  double lo = 1.0, hi = 1.0;
  while (inverse_mean_poisson(lo) <= cp) {
    lo /= 2.0;
    if (lo < 1e-300) throw RangeError("fit_lambda: bracket expansion failed");
  }
  while (inverse_mean_poisson(hi) >= cp) {
    hi *= 2.0;
    if (hi > 1e300) throw RangeError("fit_lambda: bracket expansion failed");
  }
  return bisect_log(inverse_mean_poisson, cp, lo, hi, opts);
}

double fit_gamma(double ss, const MPrior& prior, const SolverOptions& opts) {
  auto f = [&](double g) { return simpson_moment(g, prior, opts.series); };
  // The moment falls from 1 (gamma -> 0) to E(1/M) (gamma -> infinity).
  double upper = f(opts.gamma_lo);
  double lower = f(opts.gamma_hi);
  if (!(ss < upper)) {
    throw RangeError("fit_gamma: Simpson sum " + num(ss) +
                     " is not below the gamma -> 0 limit of 1 (moment " + num(upper) +
                     " at gamma=" + num(opts.gamma_lo) + ")");
  }
  if (!(ss > lower)) {
    throw RangeError("fit_gamma: Simpson sum " + num(ss) +
                     " is not above the gamma -> infinity limit E(1/M) (moment " + num(lower) +
                     " at gamma=" + num(opts.gamma_hi) + ")");
  }
  return bisect_log(f, ss, opts.gamma_lo, opts.gamma_hi, opts);
}

double fit_gamma(double ss, double lambda, const SolverOptions& opts) {
  return fit_gamma(ss, MPrior::one_shifted_poisson(lambda), opts);
}

ModelParams FitResult::params() const {
  return ModelParams{gamma1, gamma2, MPrior::one_shifted_poisson(lambda)};
}

FitResult fit_from_stats(const DiversityStats& stats, const SolverOptions& opts) {
  FitResult out;
  out.stats = stats;
  out.lambda = fit_lambda(stats.cp, opts);
  out.residual_lambda = inverse_mean_poisson(out.lambda) - stats.cp;
  MPrior prior = MPrior::one_shifted_poisson(out.lambda);
  auto solve = [&](double ss, int group) {
    try {
      return fit_gamma(ss, prior, opts);
    } catch (const RangeError& e) {
      throw RangeError("group " + std::to_string(group) + ": " + e.what());
    }
  };
  out.gamma1 = solve(stats.ss1, 1);
  out.gamma2 = solve(stats.ss2, 2);
  out.residual_gamma1 = simpson_moment(out.gamma1, prior, opts.series) - stats.ss1;
  out.residual_gamma2 = simpson_moment(out.gamma2, prior, opts.series) - stats.ss2;
  return out;
}

FitResult fit_all(const AbundanceTable& table, EstimatorMode mode, const SolverOptions& opts) {
  return fit_from_stats(diversity_stats(table, mode), opts);
}

}  // namespace vecfdp
