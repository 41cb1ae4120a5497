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

#ifndef VECFDP_ABUNDANCE_HPP_
#define VECFDP_ABUNDANCE_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include "vecfdp/counts.hpp"

namespace vecfdp {

// Per-species counts in the two groups. Every row has at least one
// observation; labels are unique.
class AbundanceTable {
 public:
  // Throws InputError on a duplicate label, negative count or all-zero row.
  void add(const std::string& label, long count1, long count2);

  // Builds a table from parallel count vectors indexed by species; all-zero
  // entries are dropped and labels are "sp<index>".
  static AbundanceTable from_vectors(const std::vector<long>& c1, const std::vector<long>& c2);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<long>& counts1() const { return counts1_; }
  const std::vector<long>& counts2() const { return counts2_; }
  const std::vector<long>& counts(int group) const { return group == 1 ? counts1_ : counts2_; }

  InSampleCounts summary() const;
  ObservedState state() const;

 private:
  std::vector<std::string> labels_;
  std::vector<long> counts1_, counts2_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace vecfdp

#endif  // VECFDP_ABUNDANCE_HPP_
