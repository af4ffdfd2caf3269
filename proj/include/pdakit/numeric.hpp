// Copyright 2026 The pdakit Authors
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
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdakit {

// Arbitrary-precision counts and exact rationals. Parameter formulas go
// through these so that nothing overflows or rounds.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
BigCount binomial(std::int64_t n, std::int64_t k);

/// Formats a rational as "p/q" in lowest terms (the denominator is always
/// written, so 2 prints as "2/1").
std::string to_string(const Rational& r);

inline std::string to_string(const BigCount& c) { return c.str(); }

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

}  // namespace pdakit
