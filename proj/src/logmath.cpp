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

#include "vecfdp/logmath.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vecfdp {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

LogValue LogValue::from_log(double log_value) {
  if (std::isnan(log_value) || log_value == std::numeric_limits<double>::infinity()) {
    throw std::domain_error("LogValue: log value must be finite or -inf");
  }
  LogValue v;
  v.log_ = log_value;
  return v;
}

LogValue LogValue::from_linear(double x) {
  if (!(x >= 0.0) || std::isinf(x)) {
    throw std::domain_error("LogValue: value must be finite and nonnegative");
  }
  LogValue v;
  v.log_ = x == 0.0 ? kNegInf : std::log(x);
  return v;
}

LogValue& LogValue::operator+=(LogValue other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    log_ = other.log_;
    return *this;
  }
  double hi = std::max(log_, other.log_);
  double lo = std::min(log_, other.log_);
  log_ = hi + std::log1p(std::exp(lo - hi));
  return *this;
}

LogValue& LogValue::operator/=(LogValue other) {
  if (other.is_zero()) throw std::domain_error("LogValue: division by zero");
  if (!is_zero()) log_ -= other.log_;
  return *this;
}

double log_gamma(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

LogValue log_pochhammer(double x, long n) {
  if (!(x > 0.0)) throw std::domain_error("log_pochhammer: x must be positive");
  if (n < 0) throw std::domain_error("log_pochhammer: n must be nonnegative");
  if (n == 0) return LogValue::one();
  return LogValue::from_log(log_gamma(x + static_cast<double>(n)) - log_gamma(x));
}

LogValue log_rising(double x, double a) {
  if (!(x > 0.0) || !(x + a > 0.0)) {
    throw std::domain_error("log_rising: arguments must be positive");
  }
  return LogValue::from_log(log_gamma(x + a) - log_gamma(x));
}

LogValue log_falling_factorial(long m, long r) {
  if (m < 0 || r < 0) throw std::domain_error("log_falling_factorial: negative argument");
  if (r > m) return LogValue::zero();
  if (r == 0) return LogValue::one();
  return log_pochhammer(static_cast<double>(m - r + 1), r);
}

LogValue log_factorial(long n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  return LogValue::from_log(log_gamma(static_cast<double>(n) + 1.0));
}

LogValue log_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return LogValue::zero();
  if (k == 0 || k == n) return LogValue::one();
  return LogValue::from_log(log_gamma(n + 1.0) - log_gamma(k + 1.0) -
                            log_gamma(static_cast<double>(n - k) + 1.0));
}

LogValue log_sum_exp(std::span<const LogValue> terms) {
  double hi = kNegInf;
  for (auto t : terms) hi = std::max(hi, t.log());
  if (hi == kNegInf) return LogValue::zero();
  double s = 0.0;
  for (auto t : terms) s += std::exp(t.log() - hi);
  return LogValue::from_log(hi + std::log(s));
}

void LogSum::add(LogValue v) {
  ++count_;
  if (v.is_zero()) return;
  double x = v.log();
  if (x <= max_) {
    scaled_ += std::exp(x - max_);
  } else {
    scaled_ = scaled_ * std::exp(max_ - x) + 1.0;
    max_ = x;
  }
}

LogValue LogSum::result() const {
  if (max_ == kNegInf) return LogValue::zero();
  return LogValue::from_log(max_ + std::log(scaled_));
}

}  // namespace vecfdp
