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

// Diversity-based moment fit: Simpson sums fix gamma_j, the cross-product
// sum fixes lambda.

#ifndef VECFDP_ESTIMATION_HPP_
#define VECFDP_ESTIMATION_HPP_

#include <string>

#include "vecfdp/abundance.hpp"
#include "vecfdp/vcoef.hpp"

namespace vecfdp {

enum class EstimatorMode { kPlugIn, kUnbiased };

std::string to_string(EstimatorMode mode);
EstimatorMode estimator_mode_from_string(const std::string& s);

struct DiversityStats {
  double ss1 = 0, ss2 = 0;  // sums of squared proportions (Simpson)
  double cp = 0;            // sum of cross products
  double morisita = 0;
  EstimatorMode mode = EstimatorMode::kPlugIn;
};

DiversityStats diversity_stats(const AbundanceTable& table,
                               EstimatorMode mode = EstimatorMode::kPlugIn);

struct SolverOptions {
  double tol = 1e-12;  // on the bracket, relative
  int max_iter = 400;
  double gamma_lo = 1e-8;
  double gamma_hi = 1e8;
  SeriesOptions series;
};

// E(1/M) = (1 - exp(-lambda)) / lambda under the one-shifted Poisson.
double inverse_mean_poisson(double lambda);
// (1 + gamma) E(1/(1 + gamma M)).
double simpson_moment(double gamma, const MPrior& prior, const SeriesOptions& opts = {});

double fit_lambda(double cp, const SolverOptions& opts = {});
double fit_gamma(double ss, double lambda, const SolverOptions& opts = {});
// Same moment equation for an arbitrary prior.
double fit_gamma(double ss, const MPrior& prior, const SolverOptions& opts = {});

struct FitResult {
  DiversityStats stats;
  double lambda = 0, gamma1 = 0, gamma2 = 0;
  double residual_lambda = 0, residual_gamma1 = 0, residual_gamma2 = 0;
  ModelParams params() const;
};

FitResult fit_all(const AbundanceTable& table, EstimatorMode mode = EstimatorMode::kPlugIn,
                  const SolverOptions& opts = {});
FitResult fit_from_stats(const DiversityStats& stats, const SolverOptions& opts = {});

}  // namespace vecfdp

#endif  // VECFDP_ESTIMATION_HPP_
