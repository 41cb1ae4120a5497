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

// Acceptance run: one PASS/FAIL line per criterion, preceded by the
// measured value of every check it aggregates. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "vecfdp/commands.hpp"
#include "vecfdp/experiments.hpp"
#include "vecfdp/io.hpp"
#include "vecfdp/validation.hpp"

namespace {

using namespace vecfdp;

// Pre-declared seeds; never tuned.
constexpr std::uint64_t kSeed = 12345;

void print_check(const CheckResult& c) {
  std::printf("    %-4s %-28s measured=%.3g threshold=%.3g  %s\n", c.pass ? "ok" : "FAIL",
              c.name.c_str(), c.measured, c.threshold, c.detail.c_str());
}

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds; 0 for none
  std::function<std::vector<CheckResult>()> run;
};

bool report(const Criterion& c) {
  auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> checks;
  try {
    checks = c.run();
  } catch (const std::exception& e) {
    checks.push_back({"exception", false, INFINITY, 0, e.what(), 0});
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = !checks.empty();
  for (const auto& k : checks) {
    print_check(k);
    pass = pass && k.pass;
  }
  bool in_time = c.time_limit <= 0 || secs < c.time_limit;
  if (c.time_limit > 0) {
    std::printf("    %-4s %-28s %.2f s (limit %.0f s)\n", in_time ? "ok" : "FAIL", "runtime", secs,
                c.time_limit);
  }
  pass = pass && in_time;
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", c.id, c.title);
  std::fflush(stdout);
  return pass;
}

std::vector<CheckResult> ants_pipeline() {
  std::vector<CheckResult> out;
  AbundanceTable table =
      read_abundance_csv(std::string(VECFDP_SOURCE_DIR) + "/data/ants_summary_matched.csv");
  InSampleCounts c = table.summary();
  const long want[] = {934, 2235, 17, 23, 30, 10};
  const long got[] = {c.n1, c.n2, c.r1, c.r2, c.r, c.t};
  const char* names[] = {"n1", "n2", "r1", "r2", "r", "t"};
  double mismatches = 0;
  std::string detail;
  for (int i = 0; i < 6; ++i) {
    detail += std::string(names[i]) + "=" + std::to_string(got[i]) + " ";
    if (got[i] != want[i]) ++mismatches;
  }
  out.push_back({"ants_summary_mismatches", mismatches == 0, mismatches, 1, detail, 0});
  RunConfig config;
  Json report = cmd_discover(table, resolve_params(table, {}, config), config);
  double p = report["discovery_probability"]["p"].get<double>();
  out.push_back({"ants_discovery_probability", p > 0, p, 0, "must be strictly positive", 0});
  return out;
}

std::vector<CheckResult> experiment1() {
  Experiment1Config config;  // alpha = 0.8, M_true = 60, n in {50, 100, 200}, 20 replications
  std::vector<Experiment1Row> rows = run_experiment1(config);
  auto find = [&](long n, const char* method) {
    for (const auto& r : rows) {
      if (r.n == n && r.method == method) return r.summary;
    }
    return Summary{NAN, NAN, NAN, 0};
  };
  std::vector<CheckResult> out;
  Summary prop = find(200, "proposed"), truth = find(200, "true");
  // measured: distance from the proposed median to the true interquartile band
  double outside = std::max({0.0, truth.q1 - prop.median, prop.median - truth.q3});
  if (std::isnan(prop.median)) outside = INFINITY;
  char buf[200];
  std::snprintf(buf, sizeof buf, "n=200 proposed median %.5g, true IQR [%.5g, %.5g], seed %llu",
                prop.median, truth.q1, truth.q3, static_cast<unsigned long long>(config.seed));
  out.push_back({"proposed_in_true_iqr", outside == 0, outside, 0, buf, 0});
  for (long n : config.sizes) {
    Summary ch = find(n, "chaosh"), tr = find(n, "true");
    double gap = std::abs(ch.median - tr.median);
    std::snprintf(buf, sizeof buf, "n=%ld chaosh median %.5g, true median %.5g", n, ch.median,
                  tr.median);
    out.push_back({"chaosh_tracks_true", gap <= 0.05, gap, 0.05, buf, 0});
  }
  return out;
}

}  // namespace

int main() {
  ValidationOptions opts;
  opts.seed = kSeed;
  opts.mc_draws = 200000;

  auto cat = [](std::vector<CheckResult> a, const std::vector<CheckResult>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  std::vector<Criterion> criteria{
      {1, "normalization suite", 120, [&] { return std::vector{check_normalization(opts)}; }},
      {2, "brute-force equivalence", 60, [&] { return std::vector{check_bruteforce_prior(opts)}; }},
      {3, "Monte-Carlo equivalence", 180, [&] { return check_monte_carlo(opts); }},
      {4, "V-coefficient identities", 0, [&] { return check_v_identities(opts); }},
      {5, "posterior-mean identity", 0, [&] { return check_posterior_mean(opts); }},
      {6, "one-step consistency", 0, [&] { return check_one_step(opts); }},
      {7, "single-group reduction", 0, [&] { return check_single_group(opts); }},
      {8, "GFC correctness", 0, [&] { return check_gfc(opts); }},
      {9, "estimation round trip", 120,
       [&] {
         return cat(check_estimation_inverse(opts), {check_generative_fit(kSeed)});
       }},
      {10, "correlation limits", 0, [&] { return check_correlation(opts); }},
      {11, "ants pipeline", 0, ants_pipeline},
      {12, "scaled experiment 1", 300, experiment1},
  };

  int failed = 0;
  for (const auto& c : criteria) failed += !report(c);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
