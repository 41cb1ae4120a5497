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

#include "vecfdp/abundance.hpp"

#include <algorithm>

#include "vecfdp/errors.hpp"

namespace vecfdp {

InSampleCounts InSampleCounts::from_distinct(long n1, long n2, long r1, long r2, long r) {
  InSampleCounts c;
  c.n1 = n1;
  c.n2 = n2;
  c.r1 = r1;
  c.r2 = r2;
  c.r = r;
  c.t = r1 + r2 - r;
  c.r1_star = r - r2;
  c.r2_star = r - r1;
  c.validate();
  return c;
}

void InSampleCounts::validate() const {
  auto fail = [](const std::string& what) { throw InputError("invalid counts: " + what); };
  if (n1 < 0 || n2 < 0) fail("negative sample size");
  if (n1 + n2 == 0) fail("empty sample");
  if (t != r1 + r2 - r) fail("t != r1 + r2 - r");
  if (r1_star != r - r2 || r2_star != r - r1) fail("r_j* != r - r_j'");
  if (r < std::max(r1, r2) || r > r1 + r2) fail("r outside [max(r1,r2), r1+r2]");
  if ((n1 == 0) != (r1 == 0) || (n2 == 0) != (r2 == 0)) fail("r_j must be 0 exactly when n_j is 0");
  if (r1 > n1 || r2 > n2) fail("r_j > n_j");
  if (t < 0 || t > std::min(n1, n2)) fail("t outside [0, min(n1,n2)]");
}

ObservedState ObservedState::from_counts(const InSampleCounts& c) {
  c.validate();
  ObservedState s;
  s.counts = c;
  return s;
}

ObservedState ObservedState::from_abundances(std::vector<long> c1, std::vector<long> c2) {
  return AbundanceTable::from_vectors(c1, c2).state();
}

void AbundanceTable::add(const std::string& label, long count1, long count2) {
  if (label.empty()) throw InputError("empty species label");
  if (count1 < 0 || count2 < 0) throw InputError("negative count for species '" + label + "'");
  if (count1 + count2 == 0) throw InputError("species '" + label + "' has no observations");
  if (index_.count(label)) throw InputError("duplicate species label '" + label + "'");
  index_.emplace(label, labels_.size());
  labels_.push_back(label);
  counts1_.push_back(count1);
  counts2_.push_back(count2);
}

AbundanceTable AbundanceTable::from_vectors(const std::vector<long>& c1,
                                            const std::vector<long>& c2) {
  if (c1.size() != c2.size()) throw InputError("count vectors differ in length");
  AbundanceTable t;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c1[i] + c2[i] > 0) t.add("sp" + std::to_string(i), c1[i], c2[i]);
  }
  return t;
}

InSampleCounts AbundanceTable::summary() const {
  InSampleCounts c;
  for (std::size_t i = 0; i < size(); ++i) {
    c.n1 += counts1_[i];
    c.n2 += counts2_[i];
    c.r1 += counts1_[i] > 0;
    c.r2 += counts2_[i] > 0;
  }
  c.r = static_cast<long>(size());
  c.t = c.r1 + c.r2 - c.r;
  c.r1_star = c.r - c.r2;
  c.r2_star = c.r - c.r1;
  return c;
}

ObservedState AbundanceTable::state() const {
  ObservedState s;
  s.counts = summary();
  s.counts.validate();
  s.counts1 = counts1_;
  s.counts2 = counts2_;
  return s;
}

}  // namespace vecfdp
