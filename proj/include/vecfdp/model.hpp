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

#ifndef VECFDP_MODEL_HPP_
#define VECFDP_MODEL_HPP_

#include <memory>

#include "vecfdp/gfc.hpp"
#include "vecfdp/vcoef.hpp"

namespace vecfdp {

// Parameters plus the V and factorial-coefficient caches every pmf needs.
// Safe to share between threads.
class Model {
 public:
  explicit Model(ModelParams params, SeriesOptions opts = {});

  const ModelParams& params() const { return vcache_.params(); }
  const SeriesOptions& options() const { return vcache_.options(); }
  double gamma(int group) const { return params().gamma(group); }

  LogValue v(long n1, long n2, long r) const { return vcache_.get(n1, n2, r); }
  // One-group V^r_n for the given group's concentration.
  LogValue v_single(int group, long n, long r) const {
    return group == 1 ? vcache_.get(n, 0, r) : vcache_.get(0, n, r);
  }

  std::shared_ptr<const GfcTable> gfc(int group, long min_n) const;
  LogValue central_gfc(int group, long n, long k) const;
  // Row k = 0..m of |C(m,k;-gamma_j,-rho)|.
  std::vector<LogValue> noncentral_row(int group, long m, double rho) const;

 private:
  VCache vcache_;
  mutable GfcCache gfc_;
};

}  // namespace vecfdp

#endif  // VECFDP_MODEL_HPP_
