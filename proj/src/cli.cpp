
#include "vecfdp/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "vecfdp/commands.hpp"
#include "vecfdp/errors.hpp"
#include "vecfdp/experiments.hpp"

namespace vecfdp {

namespace {

struct Flags {
  RunConfig config;
  std::string mode = "plug_in";
  std::string format;
  std::string output;
  std::string input;
  std::uint64_t seed = 0;
  double lambda = 0, gamma1 = 0, gamma2 = 0;
  long m1 = 0, m2 = 0;
  long n1 = 0, n2 = 0;
  std::string grid;
  int experiment = 1;
};

void add_numeric_options(CLI::App* sub, Flags& f) {
  sub->add_option("--tol", f.config.series.tol, "relative stopping tolerance of the V series")
      ->capture_default_str();
  sub->add_option("--solver-tol", f.config.solver.tol, "relative bracket tolerance of the fits")
      ->capture_default_str();
  sub->add_option("--max-terms", f.config.series.max_terms, "term cap of the V series")
      ->capture_default_str();
  sub->add_option("--pmf-cap", f.config.pmf_cap, "support cap of the posterior of M*")
      ->capture_default_str();
  sub->add_option("--mode", f.mode, "diversity estimator")
      ->check(CLI::IsMember({"plug_in", "unbiased"}))
      ->capture_default_str();
  sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("-o,--output", f.output, "write to this file instead of stdout");
}

void add_input(CLI::App* sub, Flags& f) {
  sub->add_option("input", f.input, "abundance CSV with header species,count_1,count_2")
      ->required();
}

void add_params(CLI::App* sub, Flags& f) {
  sub->add_option("--lambda", f.lambda, "Poisson rate of M - 1 (fit if omitted)");
  sub->add_option("--gamma1", f.gamma1, "Dirichlet parameter, group 1");
  sub->add_option("--gamma2", f.gamma2, "Dirichlet parameter, group 2");
  sub->add_option("--top", f.config.top, "entries listed per pmf (0 lists all)")
      ->capture_default_str();
  sub->add_option("--joint-limit", f.config.joint_limit,
                  "largest total size for which joint tables are listed")
      ->capture_default_str();
}

ParamOverrides overrides(const Flags& f, const CLI::App& sub) {
  ParamOverrides p;
  if (sub.count("--lambda")) p.lambda = f.lambda;
  if (sub.count("--gamma1")) p.gamma1 = f.gamma1;
  if (sub.count("--gamma2")) p.gamma2 = f.gamma2;
  return p;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-group species sampling: in-sample laws, prediction of new and shared "
               "species, parameter fits and baselines."};
  app.name("vecfdp");
  app.require_subcommand(1);
  Flags f;

  auto* fit = app.add_subcommand("fit", "fit Lambda, gamma1, gamma2 by moment matching");
  auto* insample = app.add_subcommand("insample", "prior laws of distinct and shared counts");
  auto* predict = app.add_subcommand("predict", "posterior laws for a further sample");
  auto* discover = app.add_subcommand("discover", "next-pair shared discovery probability");
  auto* curve = app.add_subcommand("curve", "expected new and shared species along a grid");
  auto* baselines = app.add_subcommand("baselines", "frequency-count estimators");
  auto* simulate = app.add_subcommand("simulate", "run a synthetic-population experiment");
  auto* validate = app.add_subcommand("validate", "run the oracle suites");

  for (auto* sub : {fit, insample, predict, discover, curve, baselines, simulate, validate}) {
    add_numeric_options(sub, f);
  }
  for (auto* sub : {fit, insample, predict, discover, curve, baselines}) add_input(sub, f);
  for (auto* sub : {insample, predict, discover, curve}) add_params(sub, f);
  for (auto* sub : {simulate, validate}) {
    sub->add_option("--seed", f.seed, "base seed");
  }
  insample->add_option("--n1", f.n1, "group-1 sample size (default: observed)");
  insample->add_option("--n2", f.n2, "group-2 sample size (default: observed)");
  predict->add_option("--m1", f.m1, "further draws in group 1")->required();
  predict->add_option("--m2", f.m2, "further draws in group 2")->required();
  curve->add_option("--grid", f.grid, "m1:m2:step")->required();
  simulate->add_option("experiment", f.experiment, "1 (discovery) or 2 (shared prediction)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  simulate->add_option("--replications", f.config.replications, "seeded replications")
      ->capture_default_str();
  validate->add_option("--draws", f.config.mc_draws, "Monte-Carlo draws per state")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    f.config.mode = estimator_mode_from_string(f.mode);
    if (sub->get_option_no_throw("--seed") && sub->count("--seed")) f.config.seed = f.seed;
    f.config.validate();

    std::ofstream file;
    if (!f.output.empty()) {
      file.open(f.output);
      if (!file) throw InputError("cannot write " + f.output);
    }
    std::ostream& sink = f.output.empty() ? out : file;
    auto emit = [&](const Json& j) { sink << dump_json(j); };
    bool csv = f.format == "csv";
    bool json = f.format == "json";

    AbundanceTable table;
    if (!f.input.empty()) table = read_abundance_csv(f.input);

    int status = kExitOk;
    if (name == "fit") {
      emit(cmd_fit(table, f.config));
    } else if (name == "insample") {
      InSampleCounts c = table.summary();
      long n1 = sub->count("--n1") ? f.n1 : c.n1;
      long n2 = sub->count("--n2") ? f.n2 : c.n2;
      emit(cmd_insample(table, resolve_params(table, overrides(f, *sub), f.config), n1, n2, f.config));
    } else if (name == "predict") {
      emit(cmd_predict(table, resolve_params(table, overrides(f, *sub), f.config), {f.m1, f.m2},
                       f.config));
    } else if (name == "discover") {
      emit(cmd_discover(table, resolve_params(table, overrides(f, *sub), f.config), f.config));
    } else if (name == "curve") {
      auto grid = parse_grid(f.grid);
      auto rows = cmd_curve(table, resolve_params(table, overrides(f, *sub), f.config), grid, f.config);
      if (json) {
        emit(curve_json(rows));
      } else {
        sink << curve_csv(rows);
      }
    } else if (name == "baselines") {
      emit(cmd_baselines(table));
    } else if (name == "simulate") {
      if (f.experiment == 1) {
        auto rows = run_experiment1(experiment1_config(f.config));
        if (json) {
          emit(experiment1_json(rows));
        } else {
          sink << experiment1_csv(rows);
        }
      } else {
        auto rows = run_experiment2(experiment2_config(f.config));
        if (json) {
          emit(experiment2_json(rows));
        } else {
          sink << experiment2_csv(rows);
        }
      }
    } else if (name == "validate") {
      bool passed = false;
      emit(cmd_validate(f.config, &passed));
      if (!passed) status = kExitValidation;
    }
    if (csv && name != "curve" && name != "simulate") {
      err << "vecfdp " << name << ": note: report is JSON only; --format csv ignored\n";
    }
    return status;
  } catch (const InputError& e) {
    err << "vecfdp " << name << ": input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "vecfdp " << name << ": input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "vecfdp " << name << ": input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const RangeError& e) {
    err << "vecfdp " << name << ": numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConvergenceError& e) {
    err << "vecfdp " << name << ": numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "vecfdp " << name << ": numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace vecfdp
