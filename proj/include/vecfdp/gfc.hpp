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

// Generalized factorial coefficients |C(n,k;-gamma)| and the non-central
// |C(n,k;-gamma,-rho)|, all in log space.

#ifndef VECFDP_GFC_HPP_
#define VECFDP_GFC_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "vecfdp/logmath.hpp"

namespace vecfdp {

class GfcTable {
 public:
  GfcTable(double gamma, int max_n);

  double gamma() const { return gamma_; }
  int max_n() const { return max_n_; }

  // |C(n,k;-gamma)|; zero for k > n.
  LogValue at(int n, int k) const;

 private:
  static std::size_t index(int n, int k) {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + k;
  }

  double gamma_;
  int max_n_;
  std::vector<LogValue> entries_;
};

GfcTable build_central_table(double gamma, int max_n);

// |C(m,k;-gamma,-rho)| by convolution with the central table.
LogValue log_noncentral_gfc(int m, int k, double gamma, double rho,
                            const GfcTable& table);

// Entries k = 0..m of the same, sharing the inner Pochhammer terms.
std::vector<LogValue> noncentral_gfc_row(int m, double rho, const GfcTable& table);

// Tables per gamma, grown (by doubling) when a larger n is requested.
class GfcCache {
 public:
  std::shared_ptr<const GfcTable> table(double gamma, int min_n);

 private:
  std::mutex mu_;
  std::map<double, std::shared_ptr<const GfcTable>> tables_;
};

}  // namespace vecfdp

#endif  // VECFDP_GFC_HPP_
