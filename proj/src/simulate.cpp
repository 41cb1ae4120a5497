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

#include "vecfdp/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "vecfdp/errors.hpp"
#include "vecfdp/prediction.hpp"

namespace vecfdp {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x9e3779b9u};
  return Rng(seq);
}

namespace {

std::vector<double> geometric_weights(long m, double alpha) {
  std::vector<double> w(m);
  double total = 0.0;
  for (long i = 0; i < m; ++i) {
    w[i] = std::pow(alpha, static_cast<double>(i + 1));
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

// Counts of n multinomial draws, by sequential binomials.
std::vector<long> multinomial(long n, const std::vector<double>& p, Rng& rng) {
  std::vector<long> out(p.size(), 0);
  double rest = 1.0;
  for (std::size_t i = 0; i < p.size() && n > 0; ++i) {
    if (i + 1 == p.size()) {
      out[i] = n;
      break;
    }
    double q = rest > 0.0 ? std::clamp(p[i] / rest, 0.0, 1.0) : 1.0;
    std::binomial_distribution<long> bin(n, q);
    out[i] = bin(rng);
    n -= out[i];
    rest -= p[i];
  }
  return out;
}

}  // namespace

SyntheticPopulation generate_population(long m_true, double alpha1, double alpha2,
                                        std::uint64_t seed) {
  if (m_true < 1) throw std::domain_error("population needs at least one species");
  if (!(alpha1 > 0.0 && alpha1 < 1.0) || !(alpha2 > 0.0 && alpha2 < 1.0)) {
    throw std::domain_error("decay rates must lie in (0, 1)");
  }
  SyntheticPopulation pop;
  pop.m_true = m_true;
  pop.seed = seed;
  auto w1 = geometric_weights(m_true, alpha1);
  auto w2 = geometric_weights(m_true, alpha2);
  pop.perm1.resize(m_true);
  pop.perm2.resize(m_true);
  std::iota(pop.perm1.begin(), pop.perm1.end(), 0L);
  std::iota(pop.perm2.begin(), pop.perm2.end(), 0L);
  Rng rng1 = make_rng(seed, 1), rng2 = make_rng(seed, 2);
  std::shuffle(pop.perm1.begin(), pop.perm1.end(), rng1);
  std::shuffle(pop.perm2.begin(), pop.perm2.end(), rng2);
  pop.p1.assign(m_true, 0.0);
  pop.p2.assign(m_true, 0.0);
  for (long i = 0; i < m_true; ++i) {
    pop.p1[pop.perm1[i]] = w1[i];
    pop.p2[pop.perm2[i]] = w2[i];
  }
  return pop;
}

PopulationSample draw_sample(const SyntheticPopulation& pop, long n1, long n2,
                             std::uint64_t seed) {
  if (n1 < 0 || n2 < 0) throw std::domain_error("sample sizes must be >= 0");
  Rng rng = make_rng(seed, 3);
  PopulationSample s;
  s.counts1 = multinomial(n1, pop.p1, rng);
  s.counts2 = multinomial(n2, pop.p2, rng);
  return s;
}

AbundanceTable draw_sample_table(const SyntheticPopulation& pop, long n1, long n2,
                                 std::uint64_t seed) {
  return draw_sample(pop, n1, n2, seed).table();
}

DrawSequence draw_sequence(const SyntheticPopulation& pop, long n1, long n2,
                           std::uint64_t seed) {
  Rng rng = make_rng(seed, 4);
  std::discrete_distribution<long> d1(pop.p1.begin(), pop.p1.end());
  std::discrete_distribution<long> d2(pop.p2.begin(), pop.p2.end());
  DrawSequence out;
  out.seq1.resize(n1);
  out.seq2.resize(n2);
  for (auto& x : out.seq1) x = d1(rng);
  for (auto& x : out.seq2) x = d2(rng);
  return out;
}

PopulationSample DrawSequence::prefix(long n1, long n2, long m_true) const {
  if (n1 > static_cast<long>(seq1.size()) || n2 > static_cast<long>(seq2.size())) {
    throw std::domain_error("prefix longer than the drawn sequence");
  }
  PopulationSample s;
  s.counts1.assign(m_true, 0);
  s.counts2.assign(m_true, 0);
  for (long i = 0; i < n1; ++i) ++s.counts1[seq1[i]];
  for (long i = 0; i < n2; ++i) ++s.counts2[seq2[i]];
  return s;
}

std::vector<double> sample_dirichlet(const std::vector<double>& shape, Rng& rng) {
  // Log-gamma variates; shapes below one use G(a) = G(a+1) U^{1/a}.
  std::vector<double> logs(shape.size());
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t i = 0; i < shape.size(); ++i) {
    double a = shape[i];
    if (!(a > 0.0)) throw std::domain_error("Dirichlet shape must be positive");
    if (a >= 1.0) {
      std::gamma_distribution<double> g(a, 1.0);
      logs[i] = std::log(g(rng));
    } else {
      std::gamma_distribution<double> g(a + 1.0, 1.0);
      double u = unif(rng);
      while (u == 0.0) u = unif(rng);
      logs[i] = std::log(g(rng)) + std::log(u) / a;
    }
  }
  double hi = *std::max_element(logs.begin(), logs.end());
  std::vector<double> w(shape.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(logs[i] - hi);
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

long sample_from_prior(const MPrior& prior, Rng& rng) {
  if (prior.is_poisson()) {
    std::poisson_distribution<long> pois(prior.lambda());
    return 1 + pois(rng);
  }
  long lo = prior.min_support(), hi = *prior.max_support();
  std::vector<double> w;
  for (long m = lo; m <= hi; ++m) w.push_back(prior.pmf(m));
  std::discrete_distribution<long> d(w.begin(), w.end());
  return lo + d(rng);
}

AbundanceTable generative_vecfdp_sample(const ModelParams& params, long n1, long n2,
                                        std::uint64_t seed) {
  params.validate();
  Rng rng = make_rng(seed, 5);
  long m = sample_from_prior(params.prior, rng);
  auto w1 = sample_dirichlet(std::vector<double>(m, params.gamma1), rng);
  auto w2 = sample_dirichlet(std::vector<double>(m, params.gamma2), rng);
  return AbundanceTable::from_vectors(multinomial(n1, w1, rng), multinomial(n2, w2, rng));
}

ConditionalSampler::ConditionalSampler(const ObservedState& state, const Model& model)
    : state_(state), gamma1_(model.gamma(1)), gamma2_(model.gamma(2)) {
  if (!state.has_abundances()) {
    throw InputError("conditional sampler needs per-species observed counts");
  }
  std::vector<double> w;
  PmfTable<1> post = posterior_m_pmf(state, model);
  for (const auto& [key, p] : post.entries()) {
    m_values_.push_back(key[0]);
    w.push_back(p.value());
  }
  m_dist_ = std::discrete_distribution<std::size_t>(w.begin(), w.end());
}

FutureStats ConditionalSampler::draw(const PredictionQuery& query, Rng& rng) const {
  const long r = state_.counts.r;
  const long m_star = m_values_[m_dist_(rng)];
  const long total = r + m_star;
  std::vector<double> a1(total, gamma1_), a2(total, gamma2_);
  for (long l = 0; l < r; ++l) {
    a1[l] += static_cast<double>(state_.counts1[l]);
    a2[l] += static_cast<double>(state_.counts2[l]);
  }
  auto f1 = multinomial(query.m1, sample_dirichlet(a1, rng), rng);
  auto f2 = multinomial(query.m2, sample_dirichlet(a2, rng), rng);
  FutureStats s;
  for (long l = 0; l < total; ++l) {
    bool old1 = l < r && state_.counts1[l] > 0;
    bool old2 = l < r && state_.counts2[l] > 0;
    if (!old1 && f1[l] > 0) ++s.k1;
    if (!old2 && f2[l] > 0) ++s.k2;
    if (l >= r && f1[l] + f2[l] > 0) ++s.k;
  }
  s.s = s.k1 + s.k2 - s.k;
  return s;
}

FutureStats conditional_future_sample(const ObservedState& state, const Model& model,
                                      const PredictionQuery& query, std::uint64_t seed) {
  if (query.m1 == 0 && query.m2 == 0) return {};
  Rng rng = make_rng(seed, 6);
  return ConditionalSampler(state, model).draw(query, rng);
}

PmfTable<3> empirical_future_law(const ObservedState& state, const Model& model,
                                 const PredictionQuery& query, long draws,
                                 std::uint64_t seed) {
  ConditionalSampler sampler(state, model);
  Rng rng = make_rng(seed, 7);
  std::map<std::array<long, 3>, long> hits;
  for (long i = 0; i < draws; ++i) {
    FutureStats s = sampler.draw(query, rng);
    ++hits[{s.k, s.k1, s.k2}];
  }
  PmfTable<3> out;
  for (const auto& [key, n] : hits) {
    out.add(key, LogValue::from_linear(static_cast<double>(n) / static_cast<double>(draws)));
  }
  return out;
}

PmfTable<3> empirical_prior_law(const ModelParams& params, long n1, long n2, long draws,
                                std::uint64_t seed) {
  std::map<std::array<long, 3>, long> hits;
  for (long i = 0; i < draws; ++i) {
    InSampleCounts c = generative_vecfdp_sample(params, n1, n2, seed + static_cast<std::uint64_t>(i)).summary();
    ++hits[{c.r, c.r1, c.r2}];
  }
  PmfTable<3> out;
  for (const auto& [key, n] : hits) {
    out.add(key, LogValue::from_linear(static_cast<double>(n) / static_cast<double>(draws)));
  }
  return out;
}

namespace {

// Calls f(v) for every vector of `parts` nonnegative integers summing to n.
void for_each_weak_composition(long n, long parts,
                               const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> v(parts, 0);
  std::function<void(long, long)> rec = [&](long i, long left) {
    if (i + 1 == parts) {
      v[i] = left;
      f(v);
      return;
    }
    for (long x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (parts == 0) {
    if (n == 0) f(v);
    return;
  }
  rec(0, n);
}

// log of prod_l (gamma)_{c_l} and of n! / prod_l c_l!
LogValue pochhammer_product(double gamma, const std::vector<long>& c) {
  LogValue p = LogValue::one();
  for (long x : c) p *= log_pochhammer(gamma, x);
  return p;
}

LogValue multinomial_coef(const std::vector<long>& c) {
  long n = 0;
  LogValue d = LogValue::one();
  for (long x : c) {
    n += x;
    d *= log_factorial(x);
  }
  return log_factorial(n) / d;
}

}  // namespace

PmfTable<3> bruteforce_prior(long n1, long n2, const Model& model) {
  if (n1 < 0 || n2 < 0 || n1 + n2 < 1) throw std::domain_error("bruteforce_prior: bad sizes");
  if (n1 + n2 > 8) throw std::domain_error("bruteforce_prior: n1 + n2 must be <= 8");
  const double g1 = model.gamma(1), g2 = model.gamma(2);
  PmfTable<3> out;
  for (long r = 1; r <= n1 + n2; ++r) {
    LogValue base = model.v(n1, n2, r) / log_factorial(r);
    std::vector<std::vector<long>> left;
    for_each_weak_composition(n1, r, [&](const std::vector<long>& v) { left.push_back(v); });
    for (const auto& c1 : left) {
      LogValue w1 = multinomial_coef(c1) * pochhammer_product(g1, c1);
      for_each_weak_composition(n2, r, [&](const std::vector<long>& c2) {
        long r1 = 0, r2 = 0;
        for (long l = 0; l < r; ++l) {
          if (c1[l] + c2[l] == 0) return;
          r1 += c1[l] > 0;
          r2 += c2[l] > 0;
        }
        out.add({r, r1, r2}, base * w1 * multinomial_coef(c2) * pochhammer_product(g2, c2));
      });
    }
  }
  return out;
}

PmfTable<3> bruteforce_posterior(const ObservedState& state, const PredictionQuery& query,
                                 const Model& model) {
  if (!state.has_abundances()) throw InputError("bruteforce_posterior needs per-species counts");
  if (query.m1 < 0 || query.m2 < 0 || query.m1 + query.m2 > 6) {
    throw std::domain_error("bruteforce_posterior: need 0 <= m1 + m2 <= 6");
  }
  const auto& c = state.counts;
  const double g1 = model.gamma(1), g2 = model.gamma(2);
  const long r = c.r;
  auto log_peppf = [&](const std::vector<long>& a, const std::vector<long>& b, long n1, long n2) {
    return model.v(n1, n2, static_cast<long>(a.size())) * pochhammer_product(g1, a) *
           pochhammer_product(g2, b);
  };
  const LogValue base = log_peppf(state.counts1, state.counts2, c.n1, c.n2);
  std::vector<long> a = state.counts1, b = state.counts2;
  PmfTable<3> out;
  const long steps = query.m1 + query.m2;
  std::function<void(long)> rec = [&](long step) {
    if (step == steps) {
      long k = static_cast<long>(a.size()) - r, k1 = 0, k2 = 0;
      for (std::size_t l = 0; l < a.size(); ++l) {
        bool old1 = static_cast<long>(l) < r && state.counts1[l] > 0;
        bool old2 = static_cast<long>(l) < r && state.counts2[l] > 0;
        if (!old1 && a[l] > 0) ++k1;
        if (!old2 && b[l] > 0) ++k2;
      }
      out.add({k, k1, k2}, log_peppf(a, b, c.n1 + query.m1, c.n2 + query.m2) / base);
      return;
    }
    auto& target = step < query.m1 ? a : b;
    const std::size_t existing = a.size();
    for (std::size_t l = 0; l <= existing; ++l) {
      if (l == existing) {
        a.push_back(0);
        b.push_back(0);
      }
      ++target[l];
      rec(step + 1);
      --target[l];
      if (l == existing) {
        a.pop_back();
        b.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace vecfdp
