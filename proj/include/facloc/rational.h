// Copyright 2026 The facloc Authors
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

#ifndef FACLOC_RATIONAL_H_
#define FACLOC_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace facloc {

// Exact arbitrary-precision fraction, always kept in lowest terms with a
// positive denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p", "p/q" and plain decimals ("-0.125"); exponent notation is
  // rejected. Throws Error(ErrorCode::kSyntax) on malformed input or q == 0.
  static Rational Parse(std::string_view text);
  // Non-throwing variant; returns false and leaves *out untouched on failure.
  static bool TryParse(std::string_view text, Rational* out);

  // Canonical form: "p" when the denominator is 1, otherwise "p/q".
  std::string ToString() const;
  // Fixed-point rendering with `digits` fractional digits, round-half-even.
  std::string ToDecimal(int digits = 20) const;
  // Lossy; for human-facing output only.
  double ToDouble() const { return value_.get_d(); }

  std::string Numerator() const { return value_.get_num().get_str(); }
  std::string Denominator() const { return value_.get_den().get_str(); }

  int Sign() const { return sgn(value_); }
  bool IsZero() const { return Sign() == 0; }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  // Throws Error(ErrorCode::kDivisionByZero).
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_;
};

Rational Abs(const Rational& r);
const Rational& Min(const Rational& a, const Rational& b);
const Rational& Max(const Rational& a, const Rational& b);

}  // namespace facloc

#endif  // FACLOC_RATIONAL_H_
