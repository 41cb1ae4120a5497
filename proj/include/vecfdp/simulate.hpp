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

// Synthetic populations, Monte-Carlo samplers and exhaustive-enumeration
// oracles. Every sampler is deterministic given its seed.

#ifndef VECFDP_SIMULATE_HPP_
#define VECFDP_SIMULATE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "vecfdp/abundance.hpp"
#include "vecfdp/model.hpp"
#include "vecfdp/pmf.hpp"

namespace vecfdp {

using Rng = std::mt19937_64;

// Generator for sub-stream `stream` of a seeded run.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

struct SyntheticPopulation {
  long m_true = 0;
  std::vector<double> p1, p2;
  // perm_j[i] is the species index that receives the i-th largest weight.
  std::vector<long> perm1, perm2;
  std::uint64_t seed = 0;
};

// p_{j,m} proportional to alpha_j^m, each group shuffled by its own
// permutation.
SyntheticPopulation generate_population(long m_true, double alpha1, double alpha2,
                                        std::uint64_t seed);

// Per-species sample counts (indexed like the population).
struct PopulationSample {
  std::vector<long> counts1, counts2;
  AbundanceTable table() const { return AbundanceTable::from_vectors(counts1, counts2); }
};

PopulationSample draw_sample(const SyntheticPopulation& pop, long n1, long n2,
                             std::uint64_t seed);
AbundanceTable draw_sample_table(const SyntheticPopulation& pop, long n1, long n2,
                                 std::uint64_t seed);

// Sequences of i.i.d. species draws, so that prefixes are nested samples.
struct DrawSequence {
  std::vector<long> seq1, seq2;
  PopulationSample prefix(long n1, long n2, long m_true) const;
};
DrawSequence draw_sequence(const SyntheticPopulation& pop, long n1, long n2, std::uint64_t seed);

// Symmetric (or general) Dirichlet draw, robust to small shapes.
std::vector<double> sample_dirichlet(const std::vector<double>& shape, Rng& rng);
long sample_from_prior(const MPrior& prior, Rng& rng);

// Draws M, then Dirichlet weights per group, then multinomial counts.
AbundanceTable generative_vecfdp_sample(const ModelParams& params, long n1, long n2,
                                        std::uint64_t seed);

struct FutureStats {
  long k = 0, k1 = 0, k2 = 0, s = 0;
};

// Draws the statistics of a future sample given the observed per-species
// counts: M* from its posterior, Dirichlet(gamma_j + n_{j,l}) weights over the
// r + M* species, then multinomial future counts.
class ConditionalSampler {
 public:
  ConditionalSampler(const ObservedState& state, const Model& model);
  FutureStats draw(const PredictionQuery& query, Rng& rng) const;

 private:
  ObservedState state_;
  double gamma1_, gamma2_;
  std::vector<long> m_values_;
  mutable std::discrete_distribution<std::size_t> m_dist_;
};

FutureStats conditional_future_sample(const ObservedState& state, const Model& model,
                                      const PredictionQuery& query, std::uint64_t seed);

// Empirical (k, k1, k2) law over `draws` conditional draws.
PmfTable<3> empirical_future_law(const ObservedState& state, const Model& model,
                                 const PredictionQuery& query, long draws, std::uint64_t seed);

// Empirical (r, r1, r2) law of the generative sampler.
PmfTable<3> empirical_prior_law(const ModelParams& params, long n1, long n2, long draws,
                                std::uint64_t seed);

// Exhaustive sum over count-vector pairs of the partition probability
// function, binned by (r, r1, r2). Needs n1 + n2 <= 8.
PmfTable<3> bruteforce_prior(long n1, long n2, const Model& model);

// Exhaustive sum over every labelled continuation of the observed sample,
// binned by (k, k1, k2). Needs per-species counts and m1 + m2 <= 6.
PmfTable<3> bruteforce_posterior(const ObservedState& state, const PredictionQuery& query,
                                 const Model& model);

}  // namespace vecfdp

#endif  // VECFDP_SIMULATE_HPP_
