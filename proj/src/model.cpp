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

#include "vecfdp/model.hpp"

namespace vecfdp {

Model::Model(ModelParams params, SeriesOptions opts) : vcache_(std::move(params), opts) {
  vcache_.params().validate();
}

std::shared_ptr<const GfcTable> Model::gfc(int group, long min_n) const {
  return gfc_.table(gamma(group), static_cast<int>(min_n));
}

LogValue Model::central_gfc(int group, long n, long k) const {
  return gfc(group, n)->at(static_cast<int>(n), static_cast<int>(k));
}

std::vector<LogValue> Model::noncentral_row(int group, long m, double rho) const {
  return noncentral_gfc_row(static_cast<int>(m), rho, *gfc(group, m));
}

}  // namespace vecfdp
