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

#include "pdakit/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pdakit/errors.hpp"

namespace pdakit {

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // Exact at every step: the running product is C(n - k + i, i).
    result = result * (n - k + i) / i;
  }
  return result;
}

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigCount(text));
    BigCount num(text.substr(0, slash));
    BigCount den(text.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw PreconditionError("not a rational: '" + text + "'");
  }
}

double to_double(const Rational& r) {
  using boost::multiprecision::cpp_bin_float_double;
  return static_cast<double>(cpp_bin_float_double(numerator(r)) /
                             cpp_bin_float_double(denominator(r)));
}

}  // namespace pdakit
