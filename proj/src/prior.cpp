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

#include "vecfdp/prior.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vecfdp {

namespace {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

MPrior MPrior::one_shifted_poisson(double lambda) {
  if (!(lambda > 0.0) || std::isinf(lambda)) {
    throw std::domain_error("prior: lambda must be positive and finite");
  }
  return MPrior(OneShiftedPoisson{lambda});
}

MPrior MPrior::point_mass(long m0) {
  if (m0 < 1) throw std::domain_error("prior: point mass must sit on a positive integer");
  return MPrior(PointMass{m0});
}

MPrior MPrior::table(std::vector<double> probs, long first) {
  if (first < 1) throw std::domain_error("prior: support must be positive integers");
  if (probs.empty()) throw std::domain_error("prior: empty table");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::domain_error("prior: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::domain_error("prior: table does not sum to 1");
  // Trim zero tails so min/max support are meaningful.
  while (!probs.empty() && probs.back() == 0.0) probs.pop_back();
  std::size_t lead = 0;
  while (probs[lead] == 0.0) ++lead;
  probs.erase(probs.begin(), probs.begin() + static_cast<long>(lead));
  return MPrior(Tabulated{first + static_cast<long>(lead), std::move(probs)});
}

LogValue MPrior::log_pmf(long m) const {
  return std::visit(
      Overloaded{
          [m](const OneShiftedPoisson& p) {
            if (m < 1) return LogValue::zero();
            double k = static_cast<double>(m - 1);
            return LogValue::from_log(-p.lambda + k * std::log(p.lambda) - log_gamma(k + 1.0));
          },
          [m](const PointMass& p) { return m == p.m0 ? LogValue::one() : LogValue::zero(); },
          [m](const Tabulated& t) {
            long i = m - t.first;
            if (i < 0 || i >= static_cast<long>(t.probs.size())) return LogValue::zero();
            return LogValue::from_linear(t.probs[i]);
          },
      },
      v_);
}

long MPrior::min_support() const {
  return std::visit(Overloaded{
                        [](const OneShiftedPoisson&) { return 1L; },
                        [](const PointMass& p) { return p.m0; },
                        [](const Tabulated& t) { return t.first; },
                    },
                    v_);
}

std::optional<long> MPrior::max_support() const {
  return std::visit(Overloaded{
                        [](const OneShiftedPoisson&) { return std::optional<long>(); },
                        [](const PointMass& p) { return std::optional<long>(p.m0); },
                        [](const Tabulated& t) {
                          return std::optional<long>(t.first +
                                                     static_cast<long>(t.probs.size()) - 1);
                        },
                    },
                    v_);
}

long MPrior::mode() const {
  return std::visit(Overloaded{
                        [](const OneShiftedPoisson& p) {
                          return static_cast<long>(std::floor(p.lambda)) + 1;
                        },
                        [](const PointMass& p) { return p.m0; },
                        [](const Tabulated& t) {
                          auto it = std::max_element(t.probs.begin(), t.probs.end());
                          return t.first + static_cast<long>(it - t.probs.begin());
                        },
                    },
                    v_);
}

double MPrior::mean() const {
  return std::visit(Overloaded{
                        [](const OneShiftedPoisson& p) { return 1.0 + p.lambda; },
                        [](const PointMass& p) { return static_cast<double>(p.m0); },
                        [](const Tabulated& t) {
                          double s = 0.0;
                          for (std::size_t i = 0; i < t.probs.size(); ++i) {
                            s += static_cast<double>(t.first + static_cast<long>(i)) * t.probs[i];
                          }
                          return s;
                        },
                    },
                    v_);
}

double MPrior::lambda() const {
  if (!is_poisson()) throw std::logic_error("prior: not a one-shifted Poisson");
  return std::get<OneShiftedPoisson>(v_).lambda;
}

std::string MPrior::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const OneShiftedPoisson& p) { os << "poisson1(" << p.lambda << ")"; },
                 [&](const PointMass& p) { os << "point(" << p.m0 << ")"; },
                 [&](const Tabulated& t) {
                   os << "table(first=" << t.first << ",size=" << t.probs.size() << ")";
                 },
             },
             v_);
  return os.str();
}

double mean_inverse(const MPrior& prior, const SeriesOptions& opts) {
  if (prior.is_poisson()) {
    double l = prior.lambda();
    return -std::expm1(-l) / l;
  }
  auto term = [&](long m) { return prior.log_pmf(m) / LogValue::from_linear(double(m)); };
  return sum_prior_series(prior, 1, prior.mode(), term, opts).value();
}

double mean_inverse_affine(const MPrior& prior, double gamma, const SeriesOptions& opts) {
  if (!(gamma > 0.0)) throw std::domain_error("prior: gamma must be positive");
  auto term = [&](long m) {
    return prior.log_pmf(m) / LogValue::from_linear(1.0 + gamma * double(m));
  };
  return sum_prior_series(prior, 1, prior.mode(), term, opts).value();
}

}  // namespace vecfdp
