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

#ifndef VECFDP_PMF_HPP_
#define VECFDP_PMF_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>

#include "vecfdp/logmath.hpp"

namespace vecfdp {

// Discrete distribution over integer N-tuples, log probabilities per entry.
// Entries are kept in lexicographic key order.
template <std::size_t N>
class PmfTable {
 public:
  using Key = std::array<long, N>;

  // Accumulates when the key is already present.
  void add(const Key& key, LogValue p) {
    auto [it, inserted] = entries_.emplace(key, p);
    if (!inserted) it->second += p;
  }

  LogValue log_prob(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? LogValue::zero() : it->second;
  }
  double prob(const Key& key) const { return log_prob(key).value(); }
  bool contains(const Key& key) const { return entries_.count(key) > 0; }

  double total() const {
    LogSum s;
    for (const auto& [k, v] : entries_) s.add(v);
    return s.result().value();
  }

  // Expectation of f(key) for a real-valued f.
  template <class F>
  double expect(F&& f) const {
    double s = 0.0;
    for (const auto& [k, v] : entries_) s += f(k) * v.value();
    return s;
  }
  double mean(std::size_t axis = 0) const {
    return expect([axis](const Key& k) { return static_cast<double>(k[axis]); });
  }

  template <std::size_t M>
  PmfTable<M> marginal(const std::array<std::size_t, M>& axes) const {
    PmfTable<M> out;
    for (const auto& [k, v] : entries_) {
      typename PmfTable<M>::Key sub{};
      for (std::size_t i = 0; i < M; ++i) sub[i] = k[axes[i]];
      out.add(sub, v);
    }
    return out;
  }

  // Divides every entry by the table total.
  void normalize() {
    LogSum s;
    for (const auto& [k, v] : entries_) s.add(v);
    LogValue z = s.result();
    for (auto& [k, v] : entries_) v /= z;
  }

  const std::map<Key, LogValue>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<Key, LogValue> entries_;
};

// Total variation distance between two tables on the union of supports.
template <std::size_t N>
double total_variation(const PmfTable<N>& a, const PmfTable<N>& b) {
  double d = 0.0;
  for (const auto& [k, v] : a.entries()) d += std::abs(v.value() - b.prob(k));
  for (const auto& [k, v] : b.entries()) {
    if (!a.contains(k)) d += v.value();
  }
  return 0.5 * d;
}

// Largest absolute entrywise difference on the union of supports.
template <std::size_t N>
double max_abs_diff(const PmfTable<N>& a, const PmfTable<N>& b) {
  double d = 0.0;
  for (const auto& [k, v] : a.entries()) d = std::max(d, std::abs(v.value() - b.prob(k)));
  for (const auto& [k, v] : b.entries()) d = std::max(d, std::abs(v.value() - a.prob(k)));
  return d;
}

}  // namespace vecfdp

#endif  // VECFDP_PMF_HPP_
