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

#include "vecfdp/gfc.hpp"

#include <algorithm>
#include <stdexcept>

namespace vecfdp {

GfcTable::GfcTable(double gamma, int max_n) : gamma_(gamma), max_n_(max_n) {
  if (!(gamma > 0.0)) throw std::domain_error("gfc: gamma must be positive");
  if (max_n < 0) throw std::domain_error("gfc: max_n must be nonnegative");
  entries_.assign(index(max_n + 1, 0), LogValue::zero());
  entries_[index(0, 0)] = LogValue::one();
  const LogValue lg = LogValue::from_linear(gamma);
  // |C(n+1,k)| = gamma |C(n,k-1)| + (gamma k + n) |C(n,k)|
  for (int n = 0; n < max_n; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      LogValue v = lg * entries_[index(n, k - 1)];
      if (k <= n) {
        v += LogValue::from_linear(gamma * k + n) * entries_[index(n, k)];
      }
      entries_[index(n + 1, k)] = v;
    }
  }
}

LogValue GfcTable::at(int n, int k) const {
  if (n < 0 || k < 0 || n > max_n_) throw std::domain_error("gfc: index out of table");
  if (k > n) return LogValue::zero();
  return entries_[index(n, k)];
}

GfcTable build_central_table(double gamma, int max_n) { return GfcTable(gamma, max_n); }

namespace {

// (rho)_n with (0)_0 = 1 and (0)_n = 0 otherwise.
LogValue rising_or_zero(double rho, int n) {
  if (n == 0) return LogValue::one();
  if (rho == 0.0) return LogValue::zero();
  return log_pochhammer(rho, n);
}

void check_noncentral_args(int m, double rho, const GfcTable& table) {
  if (m < 0) throw std::domain_error("gfc: m must be nonnegative");
  if (!(rho >= 0.0)) throw std::domain_error("gfc: rho must be nonnegative");
  if (m > table.max_n()) throw std::domain_error("gfc: table too small");
}

}  // namespace

LogValue log_noncentral_gfc(int m, int k, double gamma, double rho,
                            const GfcTable& table) {
  check_noncentral_args(m, rho, table);
  if (k < 0 || k > m) throw std::domain_error("gfc: need 0 <= k <= m");
  if (gamma != table.gamma()) throw std::domain_error("gfc: table built for another gamma");
  LogSum sum;
  for (int j = k; j <= m; ++j) {
    sum.add(log_binomial(m, j) * rising_or_zero(rho, m - j) * table.at(j, k));
  }
  return sum.result();
}

std::vector<LogValue> noncentral_gfc_row(int m, double rho, const GfcTable& table) {
  check_noncentral_args(m, rho, table);
  std::vector<LogValue> weight(m + 1);
  for (int j = 0; j <= m; ++j) weight[j] = log_binomial(m, j) * rising_or_zero(rho, m - j);
  std::vector<LogValue> row(m + 1);
  for (int k = 0; k <= m; ++k) {
    LogSum sum;
    for (int j = k; j <= m; ++j) sum.add(weight[j] * table.at(j, k));
    row[k] = sum.result();
  }
  return row;
}

std::shared_ptr<const GfcTable> GfcCache::table(double gamma, int min_n) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = tables_.find(gamma);
  if (it != tables_.end() && it->second->max_n() >= min_n) return it->second;
  int n = std::max(min_n, 16);
  if (it != tables_.end()) n = std::max(n, 2 * it->second->max_n());
  auto built = std::make_shared<const GfcTable>(gamma, n);
  tables_[gamma] = built;
  return built;
}

}  // namespace vecfdp
