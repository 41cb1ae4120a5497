
#include "vecfdp/commands.hpp"

#include <sstream>

#include "vecfdp/baselines.hpp"
#include "vecfdp/errors.hpp"
#include "vecfdp/insample.hpp"
#include "vecfdp/validation.hpp"

namespace vecfdp {

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

Model make_model(const ResolvedParams& params, const RunConfig& config) {
  return Model(params.params, config.series);
}

Json moments_json(double k1, double k2, double k, double s) {
  Json out = Json::object();
  out["k1"] = json_number(k1);
  out["k2"] = json_number(k2);
  out["k"] = json_number(k);
  out["s"] = json_number(s);
  return out;
}

Json summary_json(const Summary& s) {
  Json out = Json::object();
  out["median"] = json_number(s.median);
  out["q1"] = json_number(s.q1);
  out["q3"] = json_number(s.q3);
  out["count"] = s.count;
  return out;
}

Json report_header(const char* command, const AbundanceTable& table) {
  Json out = Json::object();
  out["command"] = command;
  out["observed"] = counts_json(table.summary());
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (!(series.tol > 0) || !(solver.tol > 0)) throw InputError("tolerances must be positive");
  if (series.max_terms < 1000) throw InputError("--max-terms must be at least 1000");
  if (series.patience < 1) throw InputError("series patience must be at least 1");
  if (pmf_cap < 1000) throw InputError("pmf support cap must be at least 1000");
  if (replications < 1) throw InputError("--replications must be at least 1");
  if (mc_draws < 1) throw InputError("Monte-Carlo draws must be at least 1");
  if (joint_limit < 0) throw InputError("--joint-limit must be nonnegative");
}

SolverOptions RunConfig::solver_options() const {
  SolverOptions out = solver;
  out.series = series;
  return out;
}

ResolvedParams resolve_params(const AbundanceTable& table, const ParamOverrides& given,
                              const RunConfig& config) {
  ResolvedParams out;
  if (given.lambda && given.gamma1 && given.gamma2) {
    out.params = {*given.gamma1, *given.gamma2, MPrior::one_shifted_poisson(*given.lambda)};
    out.params.validate();
    return out;
  }
  SolverOptions solver = config.solver_options();
  FitResult fit;
  fit.stats = diversity_stats(table, config.mode);
  fit.lambda = given.lambda ? *given.lambda : fit_lambda(fit.stats.cp, solver);
  fit.residual_lambda = inverse_mean_poisson(fit.lambda) - fit.stats.cp;
  MPrior prior = MPrior::one_shifted_poisson(fit.lambda);
  auto solve = [&](std::optional<double> value, double ss, int group) {
    if (value) return *value;
    try {
      return fit_gamma(ss, prior, solver);
    } catch (const RangeError& e) {
      throw RangeError("group " + std::to_string(group) + ": " + e.what());
    }
  };
  fit.gamma1 = solve(given.gamma1, fit.stats.ss1, 1);
  fit.gamma2 = solve(given.gamma2, fit.stats.ss2, 2);
  fit.residual_gamma1 = simpson_moment(fit.gamma1, prior, config.series) - fit.stats.ss1;
  fit.residual_gamma2 = simpson_moment(fit.gamma2, prior, config.series) - fit.stats.ss2;
  out.params = fit.params();
  out.params.validate();
  out.fit = fit;
  return out;
}

Json counts_json(const InSampleCounts& c) {
  Json out = Json::object();
  out["n1"] = c.n1;
  out["n2"] = c.n2;
  out["r1"] = c.r1;
  out["r2"] = c.r2;
  out["r"] = c.r;
  out["t"] = c.t;
  out["r1_star"] = c.r1_star;
  out["r2_star"] = c.r2_star;
  return out;
}

Json params_json(const ResolvedParams& params) {
  Json out = Json::object();
  out["lambda"] = json_number(params.params.prior.lambda());
  out["gamma1"] = json_number(params.params.gamma1);
  out["gamma2"] = json_number(params.params.gamma2);
  out["source"] = params.fit ? "fit" : "given";
  return out;
}

Json cmd_fit(const AbundanceTable& table, const RunConfig& config) {
  ResolvedParams params = resolve_params(table, {}, config);
  const FitResult& fit = *params.fit;
  Json out = report_header("fit", table);
  Json d = Json::object();
  d["mode"] = to_string(fit.stats.mode);
  d["simpson1"] = json_number(fit.stats.ss1);
  d["simpson2"] = json_number(fit.stats.ss2);
  d["cross_product"] = json_number(fit.stats.cp);
  d["morisita"] = json_number(fit.stats.morisita);
  out["diversity"] = d;
  out["params"] = params_json(params);
  Json res = Json::object();
  res["lambda"] = json_number(fit.residual_lambda);
  res["gamma1"] = json_number(fit.residual_gamma1);
  res["gamma2"] = json_number(fit.residual_gamma2);
  out["residuals"] = res;
  return out;
}

Json cmd_insample(const AbundanceTable& table, const ResolvedParams& params, long n1, long n2,
                  const RunConfig& config) {
  if (n1 < 1 || n2 < 1) throw InputError("insample sizes must be >= 1");
  Model model = make_model(params, config);
  Json out = report_header("insample", table);
  out["params"] = params_json(params);
  out["n1"] = n1;
  out["n2"] = n2;
  out["correlation"] = json_number(correlation(params.params, config.series));
  PmfTable<1> local1 = prior_local(1, n1, model);
  PmfTable<1> local2 = prior_local(2, n2, model);
  out["local1"] = pmf_json(local1, {"r1"}, config.top);
  out["local2"] = pmf_json(local2, {"r2"}, config.top);
  if (n1 + n2 <= config.joint_limit) {
    out["joint"] = pmf_json(prior_joint(n1, n2, model), {"r", "r1", "r2"}, config.top);
    out["global"] = pmf_json(prior_marginal_global(n1, n2, model), {"r"}, config.top);
    out["global_shared"] =
        pmf_json(prior_joint_global_shared(n1, n2, model), {"r", "t"}, config.top);
    out["shared"] = pmf_json(prior_marginal_shared(n1, n2, model), {"t"}, config.top);
    InSampleMoments m = expected_in_sample(n1, n2, model);
    out["expected"] = moments_json(m.k1, m.k2, m.k, m.s);
  } else {
    out["joint"] = nullptr;
    out["global"] = nullptr;
    out["global_shared"] = nullptr;
    out["shared"] = nullptr;
    out["expected"] = moments_json(local1.mean(0), local2.mean(0), NAN, NAN);
    out["note"] = "joint laws skipped: n1 + n2 exceeds --joint-limit";
  }
  return out;
}

Json cmd_predict(const AbundanceTable& table, const ResolvedParams& params,
                 const PredictionQuery& query, const RunConfig& config) {
  if (query.m1 < 0 || query.m2 < 0) throw InputError("--m1 and --m2 must be >= 0");
  Model model = make_model(params, config);
  ObservedState state = table.state();
  Json out = report_header("predict", table);
  out["params"] = params_json(params);
  out["m1"] = query.m1;
  out["m2"] = query.m2;
  PmfTable<1> post = posterior_m_pmf(state, model, config.pmf_cap);
  Json pm = Json::object();
  pm["mean"] = json_number(posterior_m_mean(state, model));
  pm["mean_asymptotic"] = json_number(posterior_m_mean_asymptotic(state, params.params));
  pm["pmf"] = pmf_json(post, {"m_star"}, config.top);
  out["posterior_m_star"] = pm;
  NewSpeciesMoments e = expected_new(state, query, model);
  Json ej = moments_json(e.k1, e.k2, e.k, e.s);
  ej["method"] = query.m1 + query.m2 <= kJointMomentLimit ? "joint" : "mixture";
  out["expected_new"] = ej;
  out["coverage"] = json_prob(LogValue::from_linear(shared_coverage_prob(state, query, model)));
  out["local1"] = pmf_json(posterior_local_new(1, state, query.m1, model), {"k1"}, config.top);
  out["local2"] = pmf_json(posterior_local_new(2, state, query.m2, model), {"k2"}, config.top);
  if (query.m1 + query.m2 <= config.joint_limit) {
    out["joint"] = pmf_json(posterior_joint_new(state, query, model), {"k", "k1", "k2"}, config.top);
    out["global"] = pmf_json(posterior_marginal_global_new(state, query, model), {"k"}, config.top);
    out["shared"] = pmf_json(shared_pmf(state, query, model), {"s"}, config.top);
  } else {
    out["joint"] = nullptr;
    out["global"] = nullptr;
    out["shared"] = nullptr;
    out["note"] = "joint laws skipped: m1 + m2 exceeds --joint-limit";
  }
  return out;
}

Json cmd_discover(const AbundanceTable& table, const ResolvedParams& params,
                  const RunConfig& config) {
  Model model = make_model(params, config);
  ObservedState state = table.state();
  Json out = report_header("discover", table);
  out["params"] = params_json(params);
  out["one_step_shared"] = pmf_json(one_step_shared_pmf(state, model), {"s"});
  out["discovery_probability"] =
      json_prob(LogValue::from_linear(one_step_discovery_prob(state, model)));
  PairProbs pp = predictive_pair_probs(state, model);
  Json cells = Json::object();
  cells["old_old"] = json_number(pp.old_old);
  cells["new_old"] = json_number(pp.new_old);
  cells["old_new"] = json_number(pp.old_new);
  cells["new_new"] = json_number(pp.new_new);
  cells["total_over_v"] = json_number(pp.total_over_v);
  cells["total_over_v_next"] = json_number(pp.total_over_v_next);
  out["pair_cells"] = cells;
  return out;
}

std::vector<CurveRow> cmd_curve(const AbundanceTable& table, const ResolvedParams& params,
                                const std::vector<PredictionQuery>& grid,
                                const RunConfig& config) {
  Model model = make_model(params, config);
  return extrapolation_curves(table.state(), model, grid);
}

Json cmd_baselines(const AbundanceTable& table) {
  InSampleCounts c = table.summary();
  FrequencyCounts f = frequency_counts(table);
  Json out = report_header("baselines", table);
  Json fj = Json::object();
  fj["f_1plus"] = f.f_1plus;
  fj["f_plus1"] = f.f_plus1;
  fj["f_11"] = f.f_11;
  out["frequencies"] = fj;
  auto est = [](const BaselineEstimate& b) {
    Json e = Json::object();
    e["value"] = json_number(b.value);
    e["exceeds_one"] = b.exceeds_one;
    return e;
  };
  if (c.n1 == c.n2) {
    out["yue"] = est(yue_estimator(f, c.n1, c.n2));
  } else {
    out["yue"] = nullptr;
    out["yue_note"] = "needs equal sample sizes";
  }
  out["chao_shared"] = est(chao_shared_estimator(f, c.n1, c.n2));
  out["chao2000"] = "unavailable";
  return out;
}

Json cmd_validate(const RunConfig& config, bool* all_passed) {
  ValidationOptions opts;
  opts.series = config.series;
  opts.seed = config.seed.value_or(kDefaultSeed);
  opts.mc_draws = config.mc_draws;
  std::vector<CheckResult> checks = run_validation(opts);
  Json out = Json::object();
  out["command"] = "validate";
  out["seed"] = opts.seed;
  out["mc_draws"] = opts.mc_draws;
  Json list = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    Json j = Json::object();
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["measured"] = json_number(c.measured);
    j["threshold"] = json_number(c.threshold);
    j["detail"] = c.detail;
    list.push_back(std::move(j));
    ok = ok && c.pass;
  }
  out["checks"] = std::move(list);
  out["passed"] = ok;
  if (all_passed) *all_passed = ok;
  return out;
}

std::vector<PredictionQuery> parse_grid(const std::string& text) {
  std::istringstream ss(text);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) ||
      ss.rdbuf()->in_avail() > 0) {
    throw InputError("--grid must look like m1:m2:step, got '" + text + "'");
  }
  try {
    std::size_t pa = 0, pb = 0, pc = 0;
    long m1 = std::stol(a, &pa), m2 = std::stol(b, &pb), step = std::stol(c, &pc);
    if (pa != a.size() || pb != b.size() || pc != c.size()) throw std::invalid_argument(text);
    if (m1 < 0 || m2 < 0 || step < 1) throw InputError("--grid needs m1, m2 >= 0 and step >= 1");
    return diagonal_grid(m1, m2, step);
  } catch (const std::invalid_argument&) {
    throw InputError("--grid must look like m1:m2:step, got '" + text + "'");
  } catch (const std::out_of_range&) {
    throw InputError("--grid values out of range: '" + text + "'");
  }
}

std::string curve_csv(const std::vector<CurveRow>& rows) {
  std::string out = format_csv_row({"m1", "m2", "expected_k", "expected_s", "coverage"});
  for (const auto& r : rows) {
    out += format_csv_row({std::to_string(r.m1), std::to_string(r.m2), format_number(r.expected_k),
                           format_number(r.expected_s), format_number(r.coverage)});
  }
  return out;
}

Json curve_json(const std::vector<CurveRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j = Json::object();
    j["m1"] = r.m1;
    j["m2"] = r.m2;
    j["expected_k"] = json_number(r.expected_k);
    j["expected_s"] = json_number(r.expected_s);
    j["coverage"] = json_number(r.coverage);
    out.push_back(std::move(j));
  }
  return out;
}

Experiment1Config experiment1_config(const RunConfig& config) {
  Experiment1Config c;
  if (config.seed) c.seed = *config.seed;
  c.replications = config.replications;
  c.mode = config.mode;
  c.series = config.series;
  return c;
}

Experiment2Config experiment2_config(const RunConfig& config) {
  Experiment2Config c;
  if (config.seed) c.seed = *config.seed;
  c.replications = config.replications;
  c.mode = config.mode;
  c.series = config.series;
  return c;
}

std::string experiment1_csv(const std::vector<Experiment1Row>& rows) {
  std::string out = format_csv_row({"alpha1", "alpha2", "n", "method", "median", "q1", "q3",
                                    "count", "failures", "above_one"});
  for (const auto& r : rows) {
    out += format_csv_row({format_number(r.alpha1), format_number(r.alpha2), std::to_string(r.n),
                           r.method, format_number(r.summary.median), format_number(r.summary.q1),
                           format_number(r.summary.q3), std::to_string(r.summary.count),
                           std::to_string(r.failures), std::to_string(r.above_one)});
  }
  return out;
}

std::string experiment2_csv(const std::vector<Experiment2Row>& rows) {
  std::string out = format_csv_row(
      {"alpha1", "alpha2", "split", "n_train", "n_test", "s_obs_median", "s_pred_median",
       "s_pred_q1", "s_pred_q3", "s_true_median", "s_true_q1", "s_true_q3", "failures"});
  for (const auto& r : rows) {
    out += format_csv_row({format_number(r.alpha1), format_number(r.alpha2), format_number(r.split),
                           std::to_string(r.n_train), std::to_string(r.n_test),
                           format_number(r.s_obs.median), format_number(r.s_pred.median),
                           format_number(r.s_pred.q1), format_number(r.s_pred.q3),
                           format_number(r.s_true.median), format_number(r.s_true.q1),
                           format_number(r.s_true.q3), std::to_string(r.failures)});
  }
  return out;
}

Json experiment1_json(const std::vector<Experiment1Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j = Json::object();
    j["alpha1"] = r.alpha1;
    j["alpha2"] = r.alpha2;
    j["n"] = r.n;
    j["method"] = r.method;
    j["summary"] = summary_json(r.summary);
    j["failures"] = r.failures;
    j["above_one"] = r.above_one;
    out.push_back(std::move(j));
  }
  return out;
}

Json experiment2_json(const std::vector<Experiment2Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j = Json::object();
    j["alpha1"] = r.alpha1;
    j["alpha2"] = r.alpha2;
    j["split"] = r.split;
    j["n_train"] = r.n_train;
    j["n_test"] = r.n_test;
    j["s_obs"] = summary_json(r.s_obs);
    j["s_pred"] = summary_json(r.s_pred);
    j["s_true"] = summary_json(r.s_true);
    j["failures"] = r.failures;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace vecfdp
