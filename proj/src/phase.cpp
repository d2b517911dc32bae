// Copyright 2026 The zxroute authors
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

#include "zxroute/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace zxroute {

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw std::invalid_argument("Phase denominator must be positive");
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num %= 2 * den;
  if (num < 0) {
    num += 2 * den;
  }
  num_ = num;
  den_ = den;
}

double Phase::radians() const {
  return static_cast<double>(num_) * std::numbers::pi /
         static_cast<double>(den_);
}

Phase Phase::operator+(const Phase& other) const {
  const std::int64_t g = std::gcd(den_, other.den_);
  const std::int64_t scale = other.den_ / g;
  return Phase(num_ * scale + other.num_ * (den_ / g), den_ * scale);
}

Phase Phase::operator-(const Phase& other) const { return *this + (-other); }

Phase Phase::operator-() const { return Phase(-num_, den_); }

Phase Phase::from_radians(double radians, std::int64_t max_den,
                          double* snap_error) {
  // Stern-Brocot walk for the best rational approximation of radians/pi
  // within [0, 2), denominator capped at max_den.
  double t = radians / std::numbers::pi;
  t = std::fmod(t, 2.0);
  if (t < 0) {
    t += 2.0;
  }
  std::int64_t best_num = static_cast<std::int64_t>(std::llround(t));
  std::int64_t best_den = 1;
  double best_err = std::abs(t - static_cast<double>(best_num));
  std::int64_t lo_n = 0, lo_d = 1, hi_n = 2, hi_d = 1;
  const std::int64_t whole = static_cast<std::int64_t>(t);
  lo_n = whole;
  hi_n = whole + 1;
  while (lo_d + hi_d <= max_den) {
    const std::int64_t mid_n = lo_n + hi_n;
    const std::int64_t mid_d = lo_d + hi_d;
    const double mid = static_cast<double>(mid_n) / static_cast<double>(mid_d);
    const double err = std::abs(t - mid);
    if (err < best_err) {
      best_err = err;
      best_num = mid_n;
      best_den = mid_d;
    }
    if (err == 0.0) {
      break;
    }
    if (mid < t) {
      lo_n = mid_n;
      lo_d = mid_d;
    } else {
      hi_n = mid_n;
      hi_d = mid_d;
    }
  }
  if (snap_error != nullptr) {
    *snap_error = best_err * std::numbers::pi;
  }
  return Phase(best_num, best_den);
}

std::string Phase::to_qasm() const {
  if (num_ == 0) {
    return "0";
  }
  std::string s;
  if (num_ != 1) {
    s += std::to_string(num_);
    s += "*";
  }
  s += "pi";
  if (den_ != 1) {
    s += "/";
    s += std::to_string(den_);
  }
  return s;
}

}  // namespace zxroute
