
#include "vecfdp/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "vecfdp/errors.hpp"
#include "vecfdp/gfc.hpp"
#include "vecfdp/insample.hpp"
#include "vecfdp/prediction.hpp"
#include "vecfdp/simulate.hpp"

namespace vecfdp {

namespace {

// Largest deviation seen so far and where it happened.
struct Worst {
  double value = 0;
  std::string where;
  void update(double v, const std::function<std::string()>& label) {
    if (!(v <= value)) {  // also catches NaN
      value = std::isnan(v) ? INFINITY : v;
      where = label();
    }
  }
};

CheckResult timed(const std::string& name, double threshold,
                  const std::function<Worst()>& body) {
  auto start = std::chrono::steady_clock::now();
  CheckResult out;
  out.name = name;
  out.threshold = threshold;
  try {
    Worst w = body();
    out.measured = w.value;
    out.detail = w.where;
    out.pass = w.value < threshold;
  } catch (const std::exception& e) {
    out.measured = INFINITY;
    out.detail = std::string("error: ") + e.what();
    out.pass = false;
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string describe(const ModelParams& p) {
  std::ostringstream ss;
  ss << "g1=" << p.gamma1 << " g2=" << p.gamma2 << " " << p.prior.describe();
  return ss.str();
}

std::string describe(const InSampleCounts& c) {
  std::ostringstream ss;
  ss << "n=(" << c.n1 << "," << c.n2 << ") r=(" << c.r << "," << c.r1 << "," << c.r2 << ")";
  return ss.str();
}

std::vector<ModelParams> normalization_grid() {
  std::vector<ModelParams> grid;
  for (double g1 : {0.3, 1.0, 3.0}) {
    for (double g2 : {0.3, 1.0, 3.0}) {
      for (double lambda : {0.5, 2.0, 8.0}) {
        grid.push_back({g1, g2, MPrior::one_shifted_poisson(lambda)});
      }
    }
  }
  return grid;
}

// Summary states with extreme and mixed sharing patterns for sizes (n1, n2).
std::vector<ObservedState> grid_states(long n1, long n2) {
  std::set<std::tuple<long, long, long>> seen;
  std::vector<ObservedState> out;
  for (long r1 : {1L, (n1 + 1) / 2, n1}) {
    for (long r2 : {1L, (n2 + 1) / 2, n2}) {
      for (long t : {0L, std::min(r1, r2)}) {
        if (!seen.insert({r1, r2, t}).second) continue;
        out.push_back(ObservedState::from_counts(
            InSampleCounts::from_distinct(n1, n2, r1, r2, r1 + r2 - t)));
      }
    }
  }
  return out;
}

double rel_diff(LogValue a, LogValue b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  return std::abs(std::expm1(a.log() - b.log()));
}

// |C(n,k;-gamma)| summed over compositions of n into k positive parts,
// (1/k!) sum n!/prod(n_i!) prod (gamma)_{n_i}, in long double.
long double composition_gfc(int n, int k, long double gamma) {
  if (k == 0) return n == 0 ? 1.0L : 0.0L;
  std::function<long double(int, int)> rec = [&](int left, int parts) -> long double {
    if (parts == 0) return left == 0 ? 1.0L : 0.0L;
    long double s = 0;
    long double poch = 1, fact = 1;
    for (int a = 1; a <= left - (parts - 1); ++a) {
      poch *= gamma + a - 1;
      fact *= a;
      s += poch / fact * rec(left - a, parts - 1);
    }
    return s;
  };
  long double nfact = 1, kfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  for (int i = 2; i <= k; ++i) kfact *= i;
  return nfact / kfact * rec(n, k);
}

}  // namespace

CheckResult check_normalization(const ValidationOptions& opts) {
  return timed("normalization", 1e-8, [&] {
    Worst w;
    for (const auto& p : normalization_grid()) {
      Model model(p, opts.series);
      for (long n1 = 1; n1 <= 6; ++n1) {
        for (long n2 = 1; n2 <= 6; ++n2) {
          auto at = [&](const char* what) {
            return [&, what] {
              return std::string(what) + " " + describe(p) + " n=(" + std::to_string(n1) + "," +
                     std::to_string(n2) + ")";
            };
          };
          w.update(std::abs(prior_joint(n1, n2, model).total() - 1), at("prior_joint"));
          w.update(std::abs(prior_marginal_global(n1, n2, model).total() - 1), at("prior_global"));
          w.update(std::abs(prior_joint_global_shared(n1, n2, model).total() - 1),
                   at("prior_global_shared"));
          w.update(std::abs(prior_marginal_shared(n1, n2, model).total() - 1), at("prior_shared"));
          w.update(std::abs(prior_local(1, n1, model).total() - 1), at("prior_local_1"));
          w.update(std::abs(prior_local(2, n2, model).total() - 1), at("prior_local_2"));
          for (const auto& s : grid_states(n1, n2)) {
            auto st = [&](const char* what) {
              return [&, what] { return std::string(what) + " " + describe(p) + " " + describe(s.counts); };
            };
            w.update(std::abs(posterior_m_pmf(s, model).total() - 1), st("posterior_m"));
            w.update(std::abs(one_step_shared_pmf(s, model).total() - 1), st("one_step"));
            for (long m1 = 0; m1 <= 3; ++m1) {
              w.update(std::abs(posterior_local_new(1, s, m1, model).total() - 1), st("local_1"));
              w.update(std::abs(posterior_local_new(2, s, m1, model).total() - 1), st("local_2"));
              for (long m2 = 0; m2 <= 3; ++m2) {
                PredictionQuery q{m1, m2};
                w.update(std::abs(posterior_joint_new(s, q, model).total() - 1), st("posterior_joint"));
                w.update(std::abs(posterior_marginal_global_new(s, q, model).total() - 1),
                         st("posterior_global"));
              }
            }
          }
        }
      }
    }
    return w;
  });
}

CheckResult check_bruteforce_prior(const ValidationOptions& opts) {
  return timed("bruteforce_prior", 1e-10, [&] {
    std::vector<ModelParams> points{
        {0.3, 1.0, MPrior::one_shifted_poisson(0.5)}, {1.0, 3.0, MPrior::one_shifted_poisson(2.0)},
        {3.0, 0.3, MPrior::one_shifted_poisson(8.0)}, {1.0, 1.0, MPrior::point_mass(3)},
        {0.5, 2.0, MPrior::table({0.2, 0.5, 0.3})},   {2.0, 2.0, MPrior::one_shifted_poisson(1.0)}};
    Worst w;
    for (const auto& p : points) {
      Model model(p, opts.series);
      for (long n1 = 1; n1 <= 3; ++n1) {
        for (long n2 = 1; n2 <= 3; ++n2) {
          double d = max_abs_diff(prior_joint(n1, n2, model), bruteforce_prior(n1, n2, model));
          w.update(d, [&] {
            return describe(p) + " n=(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
          });
        }
      }
    }
    return w;
  });
}

std::vector<CheckResult> check_monte_carlo(const ValidationOptions& opts) {
  struct Case {
    std::vector<long> c1, c2;
    PredictionQuery q;
    ModelParams p;
  };
  std::vector<Case> cases{
      {{2, 1, 0}, {0, 1, 2}, {2, 2}, {0.9, 1.4, MPrior::one_shifted_poisson(4.0)}},
      // every group-1 species is also seen in group 2
      {{2, 1, 0}, {1, 1, 1}, {3, 2}, {0.6, 2.0, MPrior::one_shifted_poisson(2.0)}},
      {{1, 1, 1, 0, 0}, {0, 0, 0, 2, 1}, {2, 3}, {1.5, 0.5, MPrior::one_shifted_poisson(6.0)}},
      {{3}, {2}, {3, 3}, {0.5, 2.0, MPrior::one_shifted_poisson(1.0)}},
  };
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    ObservedState s = ObservedState::from_abundances(c.c1, c.c2);
    Model model(c.p, opts.series);
    PmfTable<3> emp;
    std::string label = describe(s.counts) + " r1*=" + std::to_string(s.counts.r1_star) +
                        " m=(" + std::to_string(c.q.m1) + "," + std::to_string(c.q.m2) + ")";
    out.push_back(timed("monte_carlo_joint[" + std::to_string(i) + "]", 0.02, [&] {
      emp = empirical_future_law(s, model, c.q, opts.mc_draws, opts.seed + i);
      Worst w;
      w.update(total_variation(posterior_joint_new(s, c.q, model), emp), [&] { return label; });
      return w;
    }));
    out.push_back(timed("monte_carlo_shared[" + std::to_string(i) + "]", 0.02, [&] {
      PmfTable<1> emp_s;
      for (const auto& [key, p] : emp.entries()) emp_s.add({key[1] + key[2] - key[0]}, p);
      Worst w;
      w.update(total_variation(shared_pmf(s, c.q, model), emp_s), [&] { return label; });
      return w;
    }));
  }
  return out;
}

std::vector<CheckResult> check_v_identities(const ValidationOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(timed("v_recurrence", 1e-8, [&] {
    Worst w;
    for (const auto& p : normalization_grid()) {
      for (long n1 = 0; n1 <= 6; ++n1) {
        for (long n2 = 0; n2 <= 6; ++n2) {
          for (long r = 1; r <= std::max(1L, n1 + n2); ++r) {
            w.update(check_recurrence(n1, n2, r, p, opts.series), [&] {
              return describe(p) + " n=(" + std::to_string(n1) + "," + std::to_string(n2) +
                     ") r=" + std::to_string(r);
            });
          }
        }
      }
    }
    return w;
  }));
  out.push_back(timed("v_asymptotic", 1e-3, [&] {
    ModelParams p{1.0, 1.0, MPrior::one_shifted_poisson(3.0)};
    Worst w;
    w.update(rel_diff(log_v(400, 400, 3, p, opts.series), log_v_asymptotic(400, 400, 3, p)),
             [] { return std::string("n=(400,400) r=3 gamma=1 Lambda=3"); });
    return w;
  }));
  // Doubling the term cap and the run of small terms required before the
  // series stops pushes the truncation point further out.
  out.push_back(timed("v_truncation", 1e-12, [&] {
    SeriesOptions longer = opts.series;
    longer.max_terms *= 2;
    longer.patience *= 2;
    Worst w;
    for (const auto& p : normalization_grid()) {
      for (auto [n1, n2] : {std::pair<long, long>{4, 3}, {50, 20}, {0, 5}, {400, 400}}) {
        for (long r : {1L, 3L, 6L}) {
          double a = log_v(n1, n2, r, p, opts.series).log();
          double b = log_v(n1, n2, r, p, longer).log();
          w.update(std::abs(a - b) / std::abs(a), [&] {
            return describe(p) + " n=(" + std::to_string(n1) + "," + std::to_string(n2) +
                   ") r=" + std::to_string(r);
          });
        }
      }
    }
    return w;
  }));
  return out;
}

std::vector<CheckResult> check_posterior_mean(const ValidationOptions& opts) {
  std::vector<ModelParams> params{{0.5, 1.5, MPrior::one_shifted_poisson(2.0)},
                                  {1.0, 1.0, MPrior::one_shifted_poisson(8.0)},
                                  {3.0, 0.3, MPrior::one_shifted_poisson(20.0)}};
  std::vector<InSampleCounts> states{
      InSampleCounts::from_distinct(5, 4, 3, 2, 4), InSampleCounts::from_distinct(10, 10, 5, 5, 8),
      InSampleCounts::from_distinct(1, 1, 1, 1, 1), InSampleCounts::from_distinct(20, 3, 6, 2, 7)};
  std::vector<CheckResult> out;
  out.push_back(timed("posterior_mean_ratio", 1e-8, [&] {
    Worst w;
    for (const auto& p : params) {
      Model model(p, opts.series);
      for (const auto& c : states) {
        ObservedState s = ObservedState::from_counts(c);
        double ratio = (model.v(c.n1, c.n2, c.r + 1) / model.v(c.n1, c.n2, c.r)).value();
        double mean = posterior_m_pmf(s, model).mean(0);
        w.update(std::abs(mean - ratio) / ratio, [&] { return describe(p) + " " + describe(c); });
      }
    }
    return w;
  }));
  // measured: number of steps where the mean fails to decrease
  out.push_back(timed("posterior_mean_decreasing", 1, [&] {
    Worst w;
    double violations = 0;
    std::string where;
    for (const auto& p : params) {
      Model model(p, opts.series);
      double prev = INFINITY;
      for (long n : {50L, 100L, 200L, 400L}) {
        ObservedState s = ObservedState::from_counts(InSampleCounts::from_distinct(n, n, 5, 5, 7));
        double mean = posterior_m_mean(s, model);
        if (!(mean < prev)) {
          ++violations;
          where = describe(p) + " n=" + std::to_string(n);
        }
        prev = mean;
      }
    }
    w.update(violations, [&] { return where.empty() ? std::string("n in {50,100,200,400}") : where; });
    return w;
  }));
  return out;
}

std::vector<CheckResult> check_one_step(const ValidationOptions& opts) {
  std::vector<ModelParams> params{{0.7, 1.6, MPrior::one_shifted_poisson(2.0)},
                                  {3.0, 0.3, MPrior::one_shifted_poisson(0.5)},
                                  {1.0, 1.0, MPrior::point_mass(12)}};
  std::vector<ObservedState> states;
  for (auto [n1, n2] : {std::pair<long, long>{1, 1}, {3, 5}, {6, 6}, {40, 25}}) {
    for (auto& s : grid_states(n1, n2)) states.push_back(s);
  }
  Worst disc, cover, cells;
  std::string failure;
  auto start = std::chrono::steady_clock::now();
  try {
  for (const auto& p : params) {
    Model model(p, opts.series);
    const double g1 = p.gamma1, g2 = p.gamma2;
    for (const auto& s : states) {
      const auto& c = s.counts;
      if (model.v(c.n1, c.n2, c.r).is_zero()) continue;  // impossible under this prior
      auto label = [&] { return describe(p) + " " + describe(c); };
      PmfTable<1> one = one_step_shared_pmf(s, model);
      disc.update(std::abs(one_step_discovery_prob(s, model) - (1 - one.prob({0}))), label);
      cover.update(std::abs(shared_coverage_prob(s, {1, 1}, model) - one.prob({0})), label);

      // Split the one-step law by the V coefficient each term carries and
      // regroup into the four pair cells.
      const double vr = model.v(c.n1, c.n2, c.r).value();
      const double v1 = model.v(c.n1 + 1, c.n2 + 1, c.r + 1).value() / vr;
      const double v2 = model.v(c.n1 + 1, c.n2 + 1, c.r + 2).value() / vr;
      const double rho1 = g1 * c.r1 + c.n1, rho2 = g2 * c.r2 + c.n2;
      const double rs1 = c.r1_star, rs2 = c.r2_star;
      double v1_part0 = v1 * (g1 * rho2 + g2 * rho1), v2_part0 = v2 * g1 * g2;
      double v1_part1 = v1 * g1 * g2 * (rs1 + rs2 + 1);
      double old_old = (one.prob({0}) - v1_part0 - v2_part0) + (one.prob({1}) - v1_part1) + one.prob({2});
      double with_new = v1_part0 + v2_part0 + v1_part1;
      PairProbs pp = predictive_pair_probs(s, model);
      double scale = pp.total_over_v;
      cells.update(std::abs(pp.old_old * scale - old_old), label);
      cells.update(std::abs((pp.new_old + pp.old_new + pp.new_new) * scale - with_new), label);
      cells.update(std::abs(pp.new_new * scale - (v1 + v2) * g1 * g2), label);
    }
  }
  } catch (const std::exception& e) {
    failure = std::string("error: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::vector<CheckResult> out;
  for (auto [name, w] : {std::pair<const char*, Worst*>{"one_step_discovery", &disc},
                         {"one_step_coverage", &cover}, {"pair_cells", &cells}}) {
    if (!failure.empty()) {
      out.push_back({name, false, INFINITY, 1e-12, failure, secs / 3});
    } else {
      out.push_back({name, w->value < 1e-12, w->value, 1e-12, w->where, secs / 3});
    }
  }
  return out;
}

std::vector<CheckResult> check_single_group(const ValidationOptions& opts) {
  std::vector<ModelParams> params{{0.3, 1.0, MPrior::one_shifted_poisson(0.5)},
                                  {1.0, 3.0, MPrior::one_shifted_poisson(2.0)},
                                  {3.0, 0.3, MPrior::one_shifted_poisson(8.0)},
                                  {2.0, 2.0, MPrior::point_mass(4)}};
  std::vector<CheckResult> out;
  out.push_back(timed("single_group_gibbs_sum", 1e-10, [&] {
    Worst w;
    for (const auto& p : params) {
      for (int g = 1; g <= 2; ++g) {
        GfcTable table = build_central_table(p.gamma(g), 10);
        for (int n = 1; n <= 10; ++n) {
          LogSum sum;
          for (int r = 1; r <= n; ++r) {
            sum.add(log_v_single(n, r, p.gamma(g), p.prior, opts.series) * table.at(n, r));
          }
          w.update(std::abs(sum.result().value() - 1), [&] {
            return describe(p) + " group " + std::to_string(g) + " n=" + std::to_string(n);
          });
        }
      }
    }
    return w;
  }));
  out.push_back(timed("single_group_reduction", 1e-10, [&] {
    Worst w;
    for (const auto& p : params) {
      Model model(p, opts.series);
      for (long n = 1; n <= 10; ++n) {
        auto at = [&](const char* what) {
          return [&, what] { return std::string(what) + " " + describe(p) + " n=" + std::to_string(n); };
        };
        for (long r = 1; r <= n; ++r) {
          w.update(rel_diff(model.v(n, 0, r), log_v_single(n, r, p.gamma1, p.prior, opts.series)),
                   at("V"));
        }
        w.update(max_abs_diff(prior_marginal_global(n, 0, model), prior_local(1, n, model)),
                 at("prior group 1"));
        w.update(max_abs_diff(prior_marginal_global(0, n, model), prior_local(2, n, model)),
                 at("prior group 2"));
      }
      for (auto counts : {std::vector<long>{2, 1, 1}, {5}, {1, 1, 1, 1, 3, 2}}) {
        ObservedState s =
            ObservedState::from_abundances(counts, std::vector<long>(counts.size(), 0));
        if (model.v(s.counts.n1, 0, s.counts.r).is_zero()) continue;  // impossible under this prior
        for (long m = 1; m <= 5; ++m) {
          PmfTable<3> joint = posterior_joint_new(s, {m, 0}, model);
          auto at = [&] { return describe(p) + " " + describe(s.counts) + " m=" + std::to_string(m); };
          w.update(max_abs_diff(joint.marginal<1>({1}), posterior_local_new(1, s, m, model)), at);
          double off = 0;
          for (const auto& [key, q] : joint.entries()) {
            if (key[0] != key[1] || key[2] != 0) off += q.value();
          }
          w.update(off, at);
        }
      }
    }
    return w;
  }));
  return out;
}

std::vector<CheckResult> check_gfc(const ValidationOptions&) {
  std::vector<CheckResult> out;
  out.push_back(timed("gfc_composition_oracle", 1e-10, [&] {
    Worst w;
    for (double g : {0.3, 0.5, 1.0, 2.5, 3.0}) {
      GfcTable table = build_central_table(g, 8);
      for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
          long double want = composition_gfc(n, k, g);
          double got = table.at(n, k).value();
          double err = want == 0 ? std::abs(got) : static_cast<double>(std::abs((got - want) / want));
          w.update(err, [&] {
            return "gamma=" + std::to_string(g) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
          });
        }
      }
    }
    return w;
  }));
  out.push_back(timed("gfc_noncentral_rho0", 1e-12, [&] {
    Worst w;
    for (double g : {0.3, 1.0, 3.0}) {
      GfcTable table = build_central_table(g, 8);
      for (int m = 0; m <= 8; ++m) {
        for (int k = 0; k <= m; ++k) {
          w.update(rel_diff(log_noncentral_gfc(m, k, g, 0.0, table), table.at(m, k)), [&] {
            return "gamma=" + std::to_string(g) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
          });
        }
      }
    }
    return w;
  }));
  // Equal up to the rounding of one lgamma difference.
  out.push_back(timed("gfc_one_step", 1e-13, [&] {
    Worst w;
    for (double g : {0.3, 1.0, 3.0}) {
      GfcTable table = build_central_table(g, 4);
      for (long r : {1L, 4L}) {
        for (long n : {1L, 7L, 30L}) {
          double rho = g * r + n;
          auto at = [&] {
            return "gamma=" + std::to_string(g) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
          };
          w.update(std::abs(log_noncentral_gfc(1, 0, g, rho, table).value() / rho - 1), at);
          w.update(std::abs(log_noncentral_gfc(1, 1, g, rho, table).value() / g - 1), at);
        }
      }
    }
    return w;
  }));
  return out;
}

std::vector<CheckResult> check_estimation_inverse(const ValidationOptions& opts) {
  SolverOptions solver;
  solver.series = opts.series;
  std::vector<CheckResult> out;
  out.push_back(timed("fit_lambda_inverse", 1e-8, [&] {
    Worst w;
    for (double lambda = 0.01; lambda <= 50.0; lambda *= 1.25) {
      double got = fit_lambda(inverse_mean_poisson(lambda), solver);
      w.update(std::abs(got - lambda) / lambda, [&] { return "Lambda=" + std::to_string(lambda); });
    }
    return w;
  }));
  out.push_back(timed("fit_gamma_inverse", 1e-6, [&] {
    Worst w;
    for (double lambda : {0.5, 2.0, 5.0, 10.0}) {
      MPrior prior = MPrior::one_shifted_poisson(lambda);
      for (double g = 0.05; g <= 20.0; g *= 1.25) {
        double got = fit_gamma(simpson_moment(g, prior, opts.series), lambda, solver);
        w.update(std::abs(got - g) / g, [&] {
          return "Lambda=" + std::to_string(lambda) + " gamma=" + std::to_string(g);
        });
      }
    }
    return w;
  }));
  return out;
}

CheckResult check_generative_fit(std::uint64_t seed, const SolverOptions& solver) {
  return timed("generative_fit", 0.25, [&] {
    ModelParams truth{0.8, 1.6, MPrior::one_shifted_poisson(5.0)};
    AbundanceTable sample = generative_vecfdp_sample(truth, 20000, 20000, seed);
    FitResult fit = fit_all(sample, EstimatorMode::kPlugIn, solver);
    std::ostringstream ss;
    ss << "seed=" << seed << " species=" << sample.size() << " fit Lambda=" << fit.lambda
       << " g1=" << fit.gamma1 << " g2=" << fit.gamma2;
    Worst w;
    w.value = std::max({std::abs(fit.lambda - 5.0) / 5.0, std::abs(fit.gamma1 - 0.8) / 0.8,
                        std::abs(fit.gamma2 - 1.6) / 1.6});
    w.where = ss.str();
    return w;
  });
}

std::vector<CheckResult> check_correlation(const ValidationOptions& opts) {
  std::vector<CheckResult> out;
  const std::vector<double> lambdas{0.5, 2.0, 8.0};
  out.push_back(timed("correlation_small_gamma", 1e-4, [&] {
    Worst w;
    for (double lambda : lambdas) {
      double got = correlation({1e-6, 1e-6, MPrior::one_shifted_poisson(lambda)}, opts.series);
      w.update(std::abs(got - (1 - std::exp(-lambda)) / lambda),
               [&] { return "Lambda=" + std::to_string(lambda); });
    }
    return w;
  }));
  out.push_back(timed("correlation_large_gamma", 1e-3, [&] {
    Worst w;
    for (double lambda : lambdas) {
      double got = correlation({1e6, 1e6, MPrior::one_shifted_poisson(lambda)}, opts.series);
      w.update(std::abs(got - 1), [&] { return "Lambda=" + std::to_string(lambda); });
    }
    return w;
  }));
  // measured: number of non-increasing steps
  out.push_back(timed("correlation_monotone", 1, [&] {
    Worst w;
    double violations = 0;
    for (double lambda : lambdas) {
      double prev = -INFINITY;
      for (double g : {0.01, 0.1, 1.0, 10.0, 100.0}) {
        double c = correlation({g, g, MPrior::one_shifted_poisson(lambda)}, opts.series);
        if (!(c > prev)) ++violations;
        prev = c;
      }
    }
    w.update(violations, [] { return std::string("gamma in {0.01,0.1,1,10,100}"); });
    return w;
  }));
  return out;
}

std::vector<CheckResult> run_validation(const ValidationOptions& opts) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  append(check_gfc(opts));
  append(check_v_identities(opts));
  out.push_back(check_normalization(opts));
  out.push_back(check_bruteforce_prior(opts));
  append(check_posterior_mean(opts));
  append(check_one_step(opts));
  append(check_single_group(opts));
  append(check_correlation(opts));
  append(check_estimation_inverse(opts));
  append(check_monte_carlo(opts));
  return out;
}

}  // namespace vecfdp
