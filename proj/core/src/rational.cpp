// Copyright 2026 The stablepairs Authors
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

#include "stablepairs/rational.hpp"

#include <limits>

#include "stablepairs/errors.hpp"

namespace stablepairs {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

RationalVector to_rational(std::span<const std::int64_t> coords) {
  RationalVector out;
  out.reserve(coords.size());
  for (auto c : coords) out.emplace_back(c);
  return out;
}

Rational dot(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw InputError("dimension mismatch in dot product");
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i]) && !is_zero(y[i])) sum += x[i] * y[i];
  }
  return sum;
}

Rational dot(std::span<const std::int64_t> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw InputError("dimension mismatch in dot product");
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && !is_zero(y[i])) sum += x[i] * y[i];
  }
  return sum;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw InputError("integer out of 64-bit range: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace stablepairs
