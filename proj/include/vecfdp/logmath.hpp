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

#ifndef VECFDP_LOGMATH_HPP_
#define VECFDP_LOGMATH_HPP_

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace vecfdp {

// A nonnegative real stored as its natural log. Zero is -inf.
class LogValue {
 public:
  constexpr LogValue() = default;

  static LogValue from_log(double log_value);
  static LogValue from_linear(double x);
  static constexpr LogValue zero() { return LogValue(); }
  static constexpr LogValue one() {
    LogValue v;
    v.log_ = 0.0;
    return v;
  }

  double log() const { return log_; }
  double value() const { return std::exp(log_); }
  bool is_zero() const { return log_ == -std::numeric_limits<double>::infinity(); }

  LogValue& operator+=(LogValue other);
  LogValue& operator*=(LogValue other) {
    log_ = (is_zero() || other.is_zero()) ? -kInf : log_ + other.log_;
    return *this;
  }
  LogValue& operator/=(LogValue other);

  friend LogValue operator+(LogValue a, LogValue b) { return a += b; }
  friend LogValue operator*(LogValue a, LogValue b) { return a *= b; }
  friend LogValue operator/(LogValue a, LogValue b) { return a /= b; }
  friend bool operator<(LogValue a, LogValue b) { return a.log_ < b.log_; }
  friend bool operator==(LogValue a, LogValue b) { return a.log_ == b.log_; }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  double log_ = -kInf;
};

// log Gamma(x) for x > 0, reentrant.
double log_gamma(double x);

// (x)_n = Gamma(x+n)/Gamma(x).
LogValue log_pochhammer(double x, long n);

// Rising factorial of real order, Gamma(x+a)/Gamma(x). Needs x > 0, x+a > 0.
LogValue log_rising(double x, double a);

// m(m-1)...(m-r+1); zero when r > m.
LogValue log_falling_factorial(long m, long r);

LogValue log_factorial(long n);

// Zero outside 0 <= k <= n.
LogValue log_binomial(long n, long k);

LogValue log_sum_exp(std::span<const LogValue> terms);

// Max-shifted accumulator for long sums; cheaper than chained operator+.
class LogSum {
 public:
  void add(LogValue v);
  LogValue result() const;
  bool empty() const { return count_ == 0; }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double scaled_ = 0.0;
  long count_ = 0;
};

}  // namespace vecfdp

#endif  // VECFDP_LOGMATH_HPP_
