// Copyright 2026 The GSV Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gsv {

/// Exact fraction over 128-bit integers, always kept in lowest terms with a
/// positive denominator. Used as the scalar type of cooperative games whose
/// values are ratios of small integers.
///
/// Arithmetic throws std::overflow_error instead of wrapping.
class Rational {
 public:
  __extension__ typedef __int128 Int;

  constexpr Rational() = default;
  constexpr Rational(Int numerator) : num_(numerator) {}  // NOLINT
  Rational(Int numerator, Int denominator) : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  constexpr Int numerator() const { return num_; }
  constexpr Int denominator() const { return den_; }

  explicit operator double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const Int g = gcd(a.den_, b.den_);
    const Int lhs = mul(a.num_, b.den_ / g);
    const Int rhs = mul(b.num_, a.den_ / g);
    return Rational(add(lhs, rhs), mul(a.den_, b.den_ / g));
  }
  friend Rational operator-(const Rational& a) { return Rational(negate(a.num_), a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    const Int g1 = gcd(abs(a.num_), b.den_);
    const Int g2 = gcd(abs(b.num_), a.den_);
    return Rational(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = mul(a.num_, b.den_);
    const Int rhs = mul(b.num_, a.den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = int_to_string(num_);
    if (den_ != 1) s += "/" + int_to_string(den_);
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static Int abs(Int v) { return v < 0 ? negate(v) : v; }
  static Int gcd(Int a, Int b) {
    while (b != 0) {
      const Int t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
    return r;
  }
  static Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
    return r;
  }
  static Int negate(Int a) { return mul(a, -1); }
  static std::string int_to_string(Int v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string digits;
    while (v != 0) {
      const int d = static_cast<int>(v % 10);
      digits.insert(digits.begin(), static_cast<char>('0' + (d < 0 ? -d : d)));
      v /= 10;
    }
    return neg ? "-" + digits : digits;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = negate(num_);
      den_ = negate(den_);
    }
    const Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace gsv
