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

#include "facloc/rational.h"

#include <cctype>

#include "facloc/error.h"

namespace facloc {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 expected");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  }
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

bool Rational::TryParse(std::string_view text, Rational* out) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) return false;
    mpz_class d(std::string{den}, 10);
    if (d == 0) return false;
    value = mpq_class(mpz_class(std::string{num}, 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (!AllDigits(whole) || !AllDigits(frac)) return false;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string{whole} + std::string{frac}, 10);
    value = mpq_class(digits, scale);
  } else {
    if (!AllDigits(body)) return false;
    value = mpq_class(mpz_class(std::string{body}, 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  out->value_ = value;
  return true;
}

Rational Rational::Parse(std::string_view text) {
  Rational r;
  if (!TryParse(text, &r)) {
    throw Error(ErrorCode::kSyntax,
                "malformed rational \"" + std::string(text) + "\"");
  }
  return r;
}

std::string Rational::ToString() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::ToDecimal(int digits) const {
  if (digits < 0) digits = 0;
  const mpz_class& den = value_.get_den();
  mpz_class num = abs(value_.get_num());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = num * scale;
  mpz_class quotient;
  mpz_class remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(),
              den.get_mpz_t());
  const int half = cmp(mpz_class(remainder * 2), den);
  if (half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t()))) {
    quotient += 1;
  }
  std::string s = quotient.get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) {
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  }
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (sgn(value_) < 0 && quotient != 0) s.insert(0, "-");
  return s;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.IsZero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Abs(const Rational& r) { return r.Sign() < 0 ? -r : r; }

const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace facloc
