
// Analyses behind each CLI subcommand, returning JSON reports or row tables.

#ifndef VECFDP_COMMANDS_HPP_
#define VECFDP_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vecfdp/abundance.hpp"
#include "vecfdp/estimation.hpp"
#include "vecfdp/experiments.hpp"
#include "vecfdp/io.hpp"
#include "vecfdp/prediction.hpp"

namespace vecfdp {

struct RunConfig {
  SeriesOptions series;
  SolverOptions solver;
  long pmf_cap = 1'000'000;  // support cap for the posterior of M*
  std::optional<std::uint64_t> seed;
  EstimatorMode mode = EstimatorMode::kPlugIn;
  long replications = 20;
  long mc_draws = 200000;
  // Joint tables are listed only when n1 + n2 (or m1 + m2) is at most this.
  long joint_limit = 60;
  std::size_t top = 25;  // entries listed per pmf; 0 lists all

  // Throws InputError on non-positive tolerances or caps below the minima.
  void validate() const;
  SolverOptions solver_options() const;
};

struct ParamOverrides {
  std::optional<double> lambda, gamma1, gamma2;
};

struct ResolvedParams {
  ModelParams params;
  std::optional<FitResult> fit;  // set when any parameter came from the data
};

// Missing parameters are fitted from the table by moment matching.
ResolvedParams resolve_params(const AbundanceTable& table, const ParamOverrides& given,
                              const RunConfig& config);

Json cmd_fit(const AbundanceTable& table, const RunConfig& config);
Json cmd_insample(const AbundanceTable& table, const ResolvedParams& params, long n1, long n2,
                  const RunConfig& config);
Json cmd_predict(const AbundanceTable& table, const ResolvedParams& params,
                 const PredictionQuery& query, const RunConfig& config);
Json cmd_discover(const AbundanceTable& table, const ResolvedParams& params,
                  const RunConfig& config);
std::vector<CurveRow> cmd_curve(const AbundanceTable& table, const ResolvedParams& params,
                                const std::vector<PredictionQuery>& grid, const RunConfig& config);
Json cmd_baselines(const AbundanceTable& table);
Json cmd_validate(const RunConfig& config, bool* all_passed);

// "m1:m2:step" into a diagonal grid.
std::vector<PredictionQuery> parse_grid(const std::string& text);

std::string curve_csv(const std::vector<CurveRow>& rows);
Json curve_json(const std::vector<CurveRow>& rows);

Experiment1Config experiment1_config(const RunConfig& config);
Experiment2Config experiment2_config(const RunConfig& config);
std::string experiment1_csv(const std::vector<Experiment1Row>& rows);
std::string experiment2_csv(const std::vector<Experiment2Row>& rows);
Json experiment1_json(const std::vector<Experiment1Row>& rows);
Json experiment2_json(const std::vector<Experiment2Row>& rows);

Json counts_json(const InSampleCounts& c);
Json params_json(const ResolvedParams& params);

}  // namespace vecfdp

#endif  // VECFDP_COMMANDS_HPP_
