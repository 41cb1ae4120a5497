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

// Simulation harnesses on geometric-decay populations:
//  1. one-step shared discovery probability vs Good-Turing baselines;
//  2. prediction of shared species in a held-out test set.

#ifndef VECFDP_EXPERIMENTS_HPP_
#define VECFDP_EXPERIMENTS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vecfdp/estimation.hpp"

namespace vecfdp {

struct Summary {
  double median = 0, q1 = 0, q3 = 0;
  long count = 0;  // finite values summarized
};
// Quartiles by linear interpolation between order statistics.
Summary summarize(std::vector<double> values);

struct Experiment1Config {
  std::vector<std::pair<double, double>> scenarios{{0.8, 0.8}};
  long m_true = 60;
  std::vector<long> sizes{50, 100, 200};
  long replications = 20;
  std::uint64_t seed = 20240601;
  EstimatorMode mode = EstimatorMode::kPlugIn;
  SeriesOptions series;
};

struct Experiment1Row {
  double alpha1 = 0, alpha2 = 0;
  long n = 0;
  std::string method;  // proposed, yue, chaosh, true
  Summary summary;
  long failures = 0;    // replicates where the method produced no value
  long above_one = 0;   // replicates with a raw estimate above 1
};

std::vector<Experiment1Row> run_experiment1(const Experiment1Config& config);

struct Experiment2Config {
  std::vector<std::pair<double, double>> scenarios{{0.8, 0.8}};
  long m_true = 60;
  long n = 400;  // per group, training plus test
  std::vector<double> splits{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  long replications = 20;
  std::uint64_t seed = 20240602;
  EstimatorMode mode = EstimatorMode::kPlugIn;
  SeriesOptions series;
};

struct Experiment2Row {
  double alpha1 = 0, alpha2 = 0;
  double split = 0;
  long n_train = 0, n_test = 0;
  Summary s_obs, s_pred, s_true;
  long failures = 0;
};

std::vector<Experiment2Row> run_experiment2(const Experiment2Config& config);

}  // namespace vecfdp

#endif  // VECFDP_EXPERIMENTS_HPP_
