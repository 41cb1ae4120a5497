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

#include "vecfdp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vecfdp/baselines.hpp"
#include "vecfdp/errors.hpp"
#include "vecfdp/model.hpp"
#include "vecfdp/prediction.hpp"
#include "vecfdp/simulate.hpp"

namespace vecfdp {

Summary summarize(std::vector<double> values) {
  values.erase(std::remove_if(values.begin(), values.end(),
                              [](double x) { return !std::isfinite(x); }),
               values.end());
  Summary s;
  s.count = static_cast<long>(values.size());
  if (values.empty()) {
    s.median = s.q1 = s.q3 = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  std::sort(values.begin(), values.end());
  auto quantile = [&](double q) {
    double pos = q * static_cast<double>(values.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    std::size_t hi = std::min(lo + 1, values.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
  };
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  return s;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SolverOptions solver_for(const SeriesOptions& series) {
  SolverOptions o;
  o.series = series;
  return o;
}

// One-step discovery probability under parameters fitted to the sample; NaN
// when the moment equations have no admissible solution.
double proposed_discovery(const AbundanceTable& table, EstimatorMode mode,
                          const SeriesOptions& series) {
  try {
    FitResult fit = fit_all(table, mode, solver_for(series));
    Model model(fit.params(), series);
    return one_step_discovery_prob(table.state(), model);
  } catch (const RangeError&) {
    return kNaN;
  } catch (const InputError&) {
    return kNaN;
  }
}

long shared_count(const PopulationSample& s) {
  long t = 0;
  for (std::size_t i = 0; i < s.counts1.size(); ++i) t += s.counts1[i] > 0 && s.counts2[i] > 0;
  return t;
}

}  // namespace

std::vector<Experiment1Row> run_experiment1(const Experiment1Config& config) {
  if (config.replications < 1) throw InputError("replications must be >= 1");
  if (config.sizes.empty()) throw InputError("empty sample-size grid");
  const long n_max = *std::max_element(config.sizes.begin(), config.sizes.end());
  std::vector<Experiment1Row> rows;
  for (std::size_t sc = 0; sc < config.scenarios.size(); ++sc) {
    const auto [a1, a2] = config.scenarios[sc];
    const std::uint64_t sc_seed = config.seed + 1000003ULL * sc;
    SyntheticPopulation pop = generate_population(config.m_true, a1, a2, sc_seed);
    const std::size_t ns = config.sizes.size();
    // values[method][size] over replicates
    std::vector<std::vector<std::vector<double>>> values(4, std::vector<std::vector<double>>(ns));
    std::vector<std::vector<long>> above(4, std::vector<long>(ns, 0));
    for (long rep = 0; rep < config.replications; ++rep) {
      DrawSequence seq = draw_sequence(pop, n_max, n_max, sc_seed + 7919ULL * (rep + 1));
      for (std::size_t i = 0; i < ns; ++i) {
        const long n = config.sizes[i];
        PopulationSample sample = seq.prefix(n, n, pop.m_true);
        AbundanceTable table = sample.table();
        FrequencyCounts f = frequency_counts(table);
        BaselineEstimate yue = yue_estimator(f, n, n);
        BaselineEstimate chao = chao_shared_estimator(f, n, n);
        values[0][i].push_back(proposed_discovery(table, config.mode, config.series));
        values[1][i].push_back(yue.value);
        values[2][i].push_back(chao.value);
        values[3][i].push_back(true_discovery_prob(pop.p1, pop.p2, sample.counts1, sample.counts2));
        above[1][i] += yue.exceeds_one;
        above[2][i] += chao.exceeds_one;
      }
    }
    static const char* kMethods[] = {"proposed", "yue", "chaosh", "true"};
    for (std::size_t i = 0; i < ns; ++i) {
      for (int m = 0; m < 4; ++m) {
        Experiment1Row row;
        row.alpha1 = a1;
        row.alpha2 = a2;
        row.n = config.sizes[i];
        row.method = kMethods[m];
        row.summary = summarize(values[m][i]);
        row.failures = config.replications - row.summary.count;
        row.above_one = above[m][i];
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::vector<Experiment2Row> run_experiment2(const Experiment2Config& config) {
  if (config.replications < 1) throw InputError("replications must be >= 1");
  for (double s : config.splits) {
    if (!(s > 0.0 && s < 1.0)) throw InputError("training fractions must lie in (0, 1)");
  }
  std::vector<Experiment2Row> rows;
  for (std::size_t sc = 0; sc < config.scenarios.size(); ++sc) {
    const auto [a1, a2] = config.scenarios[sc];
    const std::uint64_t sc_seed = config.seed + 1000003ULL * sc;
    SyntheticPopulation pop = generate_population(config.m_true, a1, a2, sc_seed);
    for (std::size_t si = 0; si < config.splits.size(); ++si) {
      const double split = config.splits[si];
      const long n_train = std::clamp(std::lround(split * config.n), 1L, config.n - 1);
      const long n_test = config.n - n_train;
      std::vector<double> obs, pred, truth;
      for (long rep = 0; rep < config.replications; ++rep) {
        // Draws are i.i.d., so the leading n_train draws form a random
        // training set and the rest the test set.
        DrawSequence seq = draw_sequence(pop, config.n, config.n,
                                         sc_seed + 7919ULL * (rep + 1) + 104729ULL * (si + 1));
        PopulationSample train = seq.prefix(n_train, n_train, pop.m_true);
        PopulationSample full = seq.prefix(config.n, config.n, pop.m_true);
        double s_obs = static_cast<double>(shared_count(train));
        obs.push_back(s_obs);
        truth.push_back(static_cast<double>(shared_count(full)));
        try {
          AbundanceTable table = train.table();
          FitResult fit = fit_all(table, config.mode, solver_for(config.series));
          Model model(fit.params(), config.series);
          NewSpeciesMoments e = expected_new(table.state(), {n_test, n_test}, model);
          pred.push_back(s_obs + e.s);
        } catch (const RangeError&) {
          pred.push_back(kNaN);
        } catch (const InputError&) {
          pred.push_back(kNaN);
        }
      }
      Experiment2Row row;
      row.alpha1 = a1;
      row.alpha2 = a2;
      row.split = split;
      row.n_train = n_train;
      row.n_test = n_test;
      row.s_obs = summarize(obs);
      row.s_pred = summarize(pred);
      row.s_true = summarize(truth);
      row.failures = config.replications - row.s_pred.count;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace vecfdp
