// Copyright 2026 The Coalgame Authors.
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

#include "coalgame/rational.h"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace coalgame {

namespace {

using Wide = __int128;

Wide Gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t Narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

// Reduces num/den (den != 0) into lowest terms with den > 0.
void Normalize(Wide num, Wide den, std::int64_t* out_num,
               std::int64_t* out_den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = Gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  *out_num = Narrow(num);
  *out_den = Narrow(den);
}

std::optional<std::int64_t> ParseInt(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Normalize(num, den, &num_, &den_);
}

std::int64_t Rational::Floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::Ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = Narrow(-static_cast<Wide>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  Wide n = static_cast<Wide>(num_) * other.den_ +
           static_cast<Wide>(other.num_) * den_;
  Wide d = static_cast<Wide>(den_) * other.den_;
  Normalize(n, d, &num_, &den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  Wide n = static_cast<Wide>(num_) * other.num_;
  Wide d = static_cast<Wide>(den_) * other.den_;
  Normalize(n, d, &num_, &den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("rational division by zero");
  Wide n = static_cast<Wide>(num_) * other.den_;
  Wide d = static_cast<Wide>(den_) * other.num_;
  Normalize(n, d, &num_, &den_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::Parse(std::string_view text) {
  text = Trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = ParseInt(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = ParseInt(Trim(text.substr(0, slash)));
  auto d = ParseInt(Trim(text.substr(slash + 1)));
  if (!n || !d || *d <= 0) return std::nullopt;
  return Rational(*n, *d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace coalgame
