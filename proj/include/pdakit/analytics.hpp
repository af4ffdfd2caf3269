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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pdakit/numeric.hpp"
#include "pdakit/pda.hpp"

namespace pdakit {

/// One line of a comparison table. Exact fields are empty when the row's
/// parameters make them meaningless (for instance a non-integral n).
struct SchemeRow {
  std::string label;
  std::optional<BigCount> K;
  std::optional<Rational> one_minus_ratio;  // 1 - M/N = g/F
  std::optional<BigCount> F;
  std::optional<Rational> R;
  std::optional<BigCount> S;

  std::optional<double> F_estimate;  // Stirling-type estimate, annotation only

  // The values as printed in the published table ("K;1-M/N;F;R"), and the
  // names of the exact fields that disagree with them. Both empty for rows
  // computed on their own.
  std::string paper_value;
  std::vector<std::string> divergence;
  std::string note;

  /// Same fields as a measured record; S only when known.
  bool matches(const ParamRecord& p) const;
};

/// Restricted same-color combination of the disjoint-union families.
/// Needs a, b >= 1, a + b <= n, 0 <= t < b.
SchemeRow ex3_params(int n, int a, int b, int t);

/// Star product of two intersection families.
/// Needs 0 < a, b < n, 0 <= t <= min(a, b), a + b - t <= n (same for primes).
SchemeRow ex42_params(int n, int a, int b, int t, int n2, int a2, int b2,
                      int t2);

/// Cycle product C_m with the disjoint-union family (n, a, b) as base.
/// Needs a, b >= 1, a + b <= n and m = 3 or m divisible by 6.
SchemeRow ex50_params(int n, int a, int b, int m);

/// Linear-block-code scheme with parameters (n, q, l, x); x must be the least
/// positive integer with (l + 1) | n x and q a prime power. K = nq is read
/// off the published table rather than stated with the construction.
SchemeRow tang_params(int n, int q, int l, int x);

/// Cycle product C_m applied to tang_params(n, q, l, x).
SchemeRow tang_cycle_params(int n, int q, int l, int x, int m);

/// The four exact fields of a cycle product over a base with the given
/// (K, F, g, S).
SchemeRow cycle_params(const BigCount& K, const BigCount& F, const BigCount& g,
                       const BigCount& S, int m);

/// H(x) = -x log2 x - (1 - x) log2 (1 - x); needs 0 < x < 1.
double binary_entropy(double x);
double binary_entropy(const Rational& x);

/// 2^{n H(k/n)} / sqrt(2 pi n p (1 - p)) with p = k / n, the usual estimate
/// of C(n, k); n and k may be fractional. Needs 0 < k < n.
double stirling_binomial_estimate(double n, double k);

enum class Table { kII = 2, kIII, kIV, kV, kVI, kVII, kVIII, kIX };

/// Parses "II".."IX" (also "2".."9").
Table parse_table(const std::string& name);
std::string table_name(Table t);

std::vector<SchemeRow> table_report(Table which);

/// CSV with header label,K,one_minus_MN,F,R,paper_value,divergence; with
/// `estimate` an F_estimate column is appended.
void write_csv(std::ostream& out, const std::vector<SchemeRow>& rows,
               bool estimate = false);

}  // namespace pdakit
