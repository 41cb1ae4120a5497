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

#ifndef VECFDP_COUNTS_HPP_
#define VECFDP_COUNTS_HPP_

#include <vector>

namespace vecfdp {

// Sample sizes, local/global distinct species and shared species of a
// two-group sample. r1_star and r2_star count species seen only in group 1
// (resp. group 2).
struct InSampleCounts {
  long n1 = 0, n2 = 0;
  long r1 = 0, r2 = 0, r = 0;
  long t = 0;
  long r1_star = 0, r2_star = 0;

  static InSampleCounts from_distinct(long n1, long n2, long r1, long r2, long r);
  // Throws InputError when the linear constraints fail.
  void validate() const;
};

// What the prediction routines condition on. Abundances, when present, hold
// one entry per observed species (counts1[l], counts2[l]).
struct ObservedState {
  InSampleCounts counts;
  std::vector<long> counts1;
  std::vector<long> counts2;

  static ObservedState from_counts(const InSampleCounts& c);
  static ObservedState from_abundances(std::vector<long> c1, std::vector<long> c2);
  bool has_abundances() const { return !counts1.empty(); }
};

struct PredictionQuery {
  long m1 = 0;
  long m2 = 0;
};

}  // namespace vecfdp

#endif  // VECFDP_COUNTS_HPP_
