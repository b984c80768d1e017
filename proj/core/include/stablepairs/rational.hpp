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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace stablepairs {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using RationalVector = std::vector<Rational>;

/// Parses "7", "-3", "1/2" or "-4/6" (normalized on return).
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return value.is_zero(); }

double to_double(const Rational& value);

RationalVector to_rational(std::span<const std::int64_t> coords);

Rational dot(std::span<const Rational> x, std::span<const Rational> y);
Rational dot(std::span<const std::int64_t> x, std::span<const Rational> y);

/// Narrows an exact integer; throws InputError if it does not fit.
std::int64_t to_int64(const Integer& value);

}  // namespace stablepairs
