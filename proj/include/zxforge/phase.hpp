// Copyright 2026 The zxforge authors
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

#pragma once

#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>

#include "zxforge/errors.hpp"

namespace zxforge {

// An angle that is an exact rational multiple of pi: (num/den) * pi.
// Kept reduced with den > 0 and num normalized into [0, 2*den), i.e. the
// angle lives in [0, 2*pi). Phase arithmetic is exact integer arithmetic, so
// pi-detection and zero-detection never go through floating point.
class Phase {
 public:
  Phase() : num_(0), den_(1) {}

  Phase(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw ShapeError("phase denominator must be nonzero");
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    reduce();
  }

  static Phase zero() { return Phase(); }
  static Phase pi() { return Phase(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_pi() const { return num_ == den_; }
  // True for 0 or pi (the "classical" phases that copy through spiders).
  bool is_pauli() const { return is_zero() || is_pi(); }

  double radians() const {
    return std::numbers::pi * static_cast<double>(num_) /
           static_cast<double>(den_);
  }

  Phase operator+(const Phase& o) const {
    return Phase(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Phase operator-() const { return Phase(-num_, den_); }
  Phase operator-(const Phase& o) const { return *this + (-o); }

  bool operator==(const Phase& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Phase& o) const { return !(*this == o); }

  // Renders as "num/den" (reduced), e.g. "0/1", "1/2", "3/2".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parses "num/den" or a bare integer "num" (denominator 1).
  static Phase parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return Phase(std::stoll(text), 1);
      }
      std::int64_t n = std::stoll(text.substr(0, slash));
      std::int64_t d = std::stoll(text.substr(slash + 1));
      return Phase(n, d);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad phase literal '" + text + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("phase literal out of range '" + text + "'");
    }
  }

 private:
  void reduce() {
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    // Normalize into [0, 2*pi): num in [0, 2*den).
    std::int64_t two_den = 2 * den_;
    num_ %= two_den;
    if (num_ < 0) num_ += two_den;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace zxforge
