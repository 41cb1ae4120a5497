
// Oracle suites: normalization, enumeration and Monte-Carlo equivalence,
// coefficient identities. Each check reports its measured value against a
// tolerance.

#ifndef VECFDP_VALIDATION_HPP_
#define VECFDP_VALIDATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vecfdp/estimation.hpp"
#include "vecfdp/prior.hpp"

namespace vecfdp {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0;
  double threshold = 0;
  std::string detail;
  double seconds = 0;
};

struct ValidationOptions {
  SeriesOptions series;
  std::uint64_t seed = 12345;
  long mc_draws = 200000;
};

// Every pmf of the in-sample and prediction modules sums to one on the grid
// gamma in {0.3, 1, 3}^2, Lambda in {0.5, 2, 8}, n_j <= 6, m_j <= 3.
CheckResult check_normalization(const ValidationOptions& opts);
// prior_joint against exhaustive enumeration for n1, n2 <= 3.
CheckResult check_bruteforce_prior(const ValidationOptions& opts);
// Conditional sampler against the posterior joint and shared laws.
std::vector<CheckResult> check_monte_carlo(const ValidationOptions& opts);
// Recurrence residuals, large-sample approximation and truncation stability.
std::vector<CheckResult> check_v_identities(const ValidationOptions& opts);
// Posterior mean of M* as a V ratio; decrease as the sample grows.
std::vector<CheckResult> check_posterior_mean(const ValidationOptions& opts);
// One-step shared law, discovery probability, coverage and pair cells.
std::vector<CheckResult> check_one_step(const ValidationOptions& opts);
// Two-group formulas with an empty second group.
std::vector<CheckResult> check_single_group(const ValidationOptions& opts);
// Central table against a composition-sum oracle, non-central edge cases.
std::vector<CheckResult> check_gfc(const ValidationOptions& opts);
// fit_lambda / fit_gamma invert their moment maps.
std::vector<CheckResult> check_estimation_inverse(const ValidationOptions& opts);
// Fit on one generative sample of 20000 + 20000 draws at a fixed seed.
CheckResult check_generative_fit(std::uint64_t seed, const SolverOptions& solver = {});
// Limits and monotonicity of the correlation between the two groups.
std::vector<CheckResult> check_correlation(const ValidationOptions& opts);

// All oracle suites above except the generative fit.
std::vector<CheckResult> run_validation(const ValidationOptions& opts);

}  // namespace vecfdp

#endif  // VECFDP_VALIDATION_HPP_
