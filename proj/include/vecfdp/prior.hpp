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

// Prior on the number of species M, and the series evaluator shared by every
// sum over M.

#ifndef VECFDP_PRIOR_HPP_
#define VECFDP_PRIOR_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vecfdp/errors.hpp"
#include "vecfdp/logmath.hpp"

namespace vecfdp {

struct SeriesOptions {
  double tol = 1e-12;
  long max_terms = 1'000'000;
  int patience = 5;
};

class MPrior {
 public:
  struct OneShiftedPoisson {
    double lambda;
  };
  struct PointMass {
    long m0;
  };
  struct Tabulated {
    long first;                // support starts here
    std::vector<double> probs; // probs[i] = q(first + i)
  };

  static MPrior one_shifted_poisson(double lambda);
  static MPrior point_mass(long m0);
  // probs[i] is the mass at m = first + i; must sum to 1 within 1e-12.
  static MPrior table(std::vector<double> probs, long first = 1);

  LogValue log_pmf(long m) const;
  double pmf(long m) const { return log_pmf(m).value(); }

  long min_support() const;
  std::optional<long> max_support() const;  // empty for infinite support
  long mode() const;
  double mean() const;

  bool is_poisson() const { return std::holds_alternative<OneShiftedPoisson>(v_); }
  double lambda() const;  // throws unless one-shifted Poisson
  std::string describe() const;

  const std::variant<OneShiftedPoisson, PointMass, Tabulated>& variant() const { return v_; }

 private:
  explicit MPrior(std::variant<OneShiftedPoisson, PointMass, Tabulated> v) : v_(std::move(v)) {}
  std::variant<OneShiftedPoisson, PointMass, Tabulated> v_;
};

// Sum of term(m) * q(m)-style LogValues over m >= m_start. Finite supports are
// summed exactly. Otherwise the sum stops once `patience` consecutive terms fall
// below tol times the partial sum and m is past `guard`.
template <class Term>
LogValue sum_prior_series(const MPrior& prior, long m_start, long guard, Term&& term,
                          const SeriesOptions& opts) {
  long m = std::max(m_start, prior.min_support());
  LogSum sum;
  if (auto hi = prior.max_support()) {
    for (; m <= *hi; ++m) sum.add(term(m));
    return sum.result();
  }
  const double log_tol = std::log(opts.tol);
  int small = 0;
  for (long count = 0;; ++m, ++count) {
    if (count >= opts.max_terms) {
      throw ConvergenceError("series over M did not converge within " +
                             std::to_string(opts.max_terms) + " terms");
    }
    LogValue t = term(m);
    sum.add(t);
    LogValue partial = sum.result();
    if (t.is_zero() || t.log() < log_tol + partial.log()) {
      ++small;
    } else {
      small = 0;
    }
    if (small >= opts.patience && m > guard) break;
  }
  return sum.result();
}

// E(1/M).
double mean_inverse(const MPrior& prior, const SeriesOptions& opts = {});
// E(1/(1 + gamma M)).
double mean_inverse_affine(const MPrior& prior, double gamma, const SeriesOptions& opts = {});

}  // namespace vecfdp

#endif  // VECFDP_PRIOR_HPP_
