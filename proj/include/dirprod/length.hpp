// Copyright 2026 The dirprod Authors
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

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>

#include "dirprod/error.hpp"

namespace dirprod {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr Rational operator/(Rational a, Rational b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend constexpr bool operator==(Rational a, Rational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// A length in sixteenths of an edge, or infinity (points in different components).
class Dist16 {
 public:
  constexpr Dist16() = default;

  static constexpr Dist16 sixteenths(std::int64_t v) {
    Dist16 d;
    d.value_ = v;
    return d;
  }
  static constexpr Dist16 edges(std::int64_t e) { return sixteenths(16 * e); }
  static constexpr Dist16 infinity() {
    Dist16 d;
    d.infinite_ = true;
    return d;
  }
  /// Exact conversion; the rational must be a multiple of 1/16.
  static Dist16 from_rational(Rational r) {
    const Rational s = r * Rational(16);
    if (!s.is_integer()) throw Error(ErrorCode::BadParameter, r.str() + " is not on the 1/16 grid");
    return sixteenths(s.num());
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  /// Raw value in sixteenths; throws on infinity.
  constexpr std::int64_t value() const {
    if (infinite_) throw Error(ErrorCode::Disconnected, "infinite distance has no finite value");
    return value_;
  }

  Rational to_rational() const { return {value(), 16}; }
  bool is_multiple_of(std::int64_t sixteenths_step) const {
    return is_finite() && value_ % sixteenths_step == 0;
  }

  friend constexpr bool operator==(Dist16 a, Dist16 b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Dist16 a, Dist16 b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Dist16 operator+(Dist16 a, Dist16 b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return sixteenths(a.value_ + b.value_);
  }

  std::string str() const { return infinite_ ? std::string("inf") : to_rational().str(); }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const Dist16& d) { return os << d.str(); }

/// Walk lengths in edges; nullopt means no such walk exists.
using WalkLength = std::optional<int>;

inline Dist16 to_dist16(WalkLength w) { return w ? Dist16::edges(*w) : Dist16::infinity(); }

}  // namespace dirprod
