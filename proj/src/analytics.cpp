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

#include "pdakit/analytics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pdakit/errors.hpp"

namespace pdakit {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::string tuple(std::initializer_list<int> xs) {
  std::string out = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + ")";
}

BigCount power(int base, int exp) {
  return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exp));
}

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

// Published numbers come as "5", "1/4", "7.77", "2^19" or "3*2^7".
std::optional<Rational> parse_published(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto star = text.find('*');
  if (star != std::string::npos) {
    auto a = parse_published(text.substr(0, star));
    auto b = parse_published(text.substr(star + 1));
    if (!a || !b) return std::nullopt;
    return *a * *b;
  }
  const auto caret = text.find('^');
  if (caret != std::string::npos) {
    return Rational(power(std::stoi(text.substr(0, caret)),
                          std::stoi(text.substr(caret + 1))));
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    BigCount scale = power(10, static_cast<int>(frac.size()));
    BigCount whole(text.substr(0, dot) + frac);
    return Rational(whole, scale);
  }
  return parse_rational(text);
}

// Attaches the published row and records which exact fields disagree.
void compare(SchemeRow& row, const std::string& k, const std::string& omm,
             const std::string& f, const std::string& r) {
  row.paper_value = k + ";" + omm + ";" + f + ";" + r;
  auto check = [&](const char* name, const std::optional<Rational>& mine,
                   const std::string& theirs) {
    const auto published = parse_published(theirs);
    if (mine && published && *mine != *published) row.divergence.push_back(name);
  };
  auto as_rational = [](const std::optional<BigCount>& c) {
    return c ? std::optional<Rational>(Rational(*c)) : std::nullopt;
  };
  check("K", as_rational(row.K), k);
  check("one_minus_MN", row.one_minus_ratio, omm);
  check("F", as_rational(row.F), f);
  check("R", row.R, r);
}

SchemeRow make_row(std::string label, const BigCount& K, const BigCount& F,
                   const BigCount& g, const BigCount& S) {
  SchemeRow row;
  row.label = std::move(label);
  row.K = K;
  row.F = F;
  row.S = S;
  row.one_minus_ratio = Rational(g, F);
  row.R = Rational(S, F);
  return row;
}

// A component scheme quoted at a non-integral n with n^2 given: K = n^2 / 2
// and F = C(n, p n) by the estimate.
SchemeRow component_row(const std::string& label, int n_squared, double p) {
  SchemeRow row;
  row.label = label;
  row.K = BigCount(n_squared / 2);
  const double n = std::sqrt(static_cast<double>(n_squared));
  row.F_estimate = stirling_binomial_estimate(n, p * n);
  row.note = "component scheme at non-integral n; F only as an estimate";
  return row;
}

}  // namespace

bool SchemeRow::matches(const ParamRecord& p) const {
  if (!K || !F || !one_minus_ratio || !R) return false;
  if (*K != p.K || *F != p.F) return false;
  if (*one_minus_ratio != Rational(p.g, p.F) || *R != p.rate) return false;
  return !S || *S == p.S;
}

SchemeRow ex3_params(int n, int a, int b, int t) {
  require(a >= 1 && b >= 1 && a + b <= n && 0 <= t && t < b,
          "ex3_params needs a, b >= 1, a + b <= n and 0 <= t < b, got " +
              tuple({n, a, b, t}));
  const BigCount F = binomial(n, b - t);
  return make_row(tuple({n, a, b, t}), binomial(n, a + t) * binomial(a + t, a),
                  F, binomial(n - a - t, b - t),
                  binomial(n, a + b) * binomial(a + b, b));
}

SchemeRow ex42_params(int n, int a, int b, int t, int n2, int a2, int b2,
                      int t2) {
  auto check = [](int n, int a, int b, int t) {
    require(0 < a && a < n && 0 < b && b < n && 0 <= t && t <= std::min(a, b) &&
                a + b - t <= n,
            "ex42_params needs 0 < a, b < n, 0 <= t <= min(a, b) and "
            "a + b - t <= n, got " +
                tuple({n, a, b, t}));
  };
  check(n, a, b, t);
  check(n2, a2, b2, t2);
  auto colors = [](int n, int a, int b, int t) {
    const int d = a + b - 2 * t;
    return binomial(n, d) * binomial(n - d, t);
  };
  return make_row(
      tuple({n, a, b, t, n2, a2, b2, t2}), binomial(n, b) * binomial(n2, b2),
      binomial(n, a) * binomial(n2, a2),
      binomial(b, t) * binomial(b2, t2) * binomial(n - b, a - t) *
          binomial(n2 - b2, a2 - t2),
      colors(n, a, b, t) * colors(n2, a2, b2, t2));
}

SchemeRow cycle_params(const BigCount& K, const BigCount& F, const BigCount& g,
                       const BigCount& S, int m) {
  require(m == 3 || (m > 0 && m % 6 == 0),
          "cycle length must be 3 or a positive multiple of 6, got " +
              std::to_string(m));
  return make_row("", m * K, m * F, 3 * g, (m == 3 ? 9 : 8) * S);
}

SchemeRow ex50_params(int n, int a, int b, int m) {
  require(a >= 1 && b >= 1 && a + b <= n,
          "ex50_params needs a, b >= 1 and a + b <= n, got " +
              tuple({n, a, b, m}));
  SchemeRow row = cycle_params(binomial(n, b), binomial(n, a),
                               binomial(n - b, a), binomial(n, a + b), m);
  row.label = tuple({n, a, b, m});
  return row;
}

SchemeRow tang_params(int n, int q, int l, int x) {
  require(n >= 1 && l >= 1, "tang_params needs n, l >= 1, got " +
                                tuple({n, q, l, x}));
  require(is_prime_power(q), "q = " + std::to_string(q) + " is not a prime power");
  int least = 1;
  while ((static_cast<long long>(n) * least) % (l + 1) != 0) ++least;
  require(x == least, "x = " + std::to_string(x) +
                          " is not the least positive integer with (l + 1) | "
                          "n x; that is " +
                          std::to_string(least));
  const BigCount F = (q - 1) * power(q, l) * x * n / (l + 1);
  SchemeRow row = make_row(tuple({n, q, l, x}), BigCount(n) * q, F,
                           BigCount(x) * (q - 1) * power(q, l - 1),
                           BigCount(x) * power(q, l));
  row.note = "K = nq inferred";
  return row;
}

SchemeRow tang_cycle_params(int n, int q, int l, int x, int m) {
  const SchemeRow base = tang_params(n, q, l, x);
  const BigCount g = BigCount(x) * (q - 1) * power(q, l - 1);
  SchemeRow row = cycle_params(*base.K, *base.F, g, *base.S, m);
  row.label = tuple({n, q, l, x, m});
  row.note = base.note;
  return row;
}

double binary_entropy(double x) {
  require(x > 0.0 && x < 1.0, "binary entropy needs 0 < x < 1");
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double binary_entropy(const Rational& x) { return binary_entropy(to_double(x)); }

double stirling_binomial_estimate(double n, double k) {
  require(k > 0.0 && k < n, "estimate needs 0 < k < n");
  const double p = k / n;
  return std::exp2(n * binary_entropy(p)) /
         std::sqrt(2.0 * std::numbers::pi * n * p * (1.0 - p));
}

Table parse_table(const std::string& name) {
  static const char* kNames[] = {"II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  for (int i = 0; i < 8; ++i) {
    if (name == kNames[i] || name == std::to_string(i + 2)) {
      return static_cast<Table>(i + 2);
    }
  }
  throw PreconditionError("unknown table '" + name + "' (expected II..IX)");
}

std::string table_name(Table t) {
  static const char* kNames[] = {"II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  return kNames[static_cast<int>(t) - 2];
}

std::vector<SchemeRow> table_report(Table which) {
  std::vector<SchemeRow> rows;
  switch (which) {
    case Table::kII: {
      const std::pair<int, const char*> spec[] = {
          {180, "2382"}, {264, "15406"}, {364, "101147"}};
      for (const auto& [n2, f] : spec) {
        SchemeRow row =
            component_row("n^2=" + std::to_string(n2), n2, 0.5);
        compare(row, std::to_string(n2 / 2), "1/4", f, "1");
        rows.push_back(std::move(row));
      }
      break;
    }
    case Table::kIII: {
      const char* paper[][4] = {{"90", "1/4", "210", "5"},
                                {"132", "1/4", "792", "7"},
                                {"182", "1/4", "3003", "8"}};
      for (int i = 0; i < 3; ++i) {
        const int n = 10 + 2 * i;
        SchemeRow row = ex3_params(n, 1, n / 2, 1);
        compare(row, paper[i][0], paper[i][1], paper[i][2], paper[i][3]);
        rows.push_back(std::move(row));
      }
      break;
    }
    case Table::kIV: {
      const double mu = 2.0 * std::sqrt(2.0) + 4.0;
      const char* paper[][2] = {{"2598778", "39.50"},
                                {"255881905", "50.91"},
                                {"45902134943", "63.64"}};
      const int n2s[] = {1568, 2592, 4050};
      for (int i = 0; i < 3; ++i) {
        SchemeRow row =
            component_row("n^2=" + std::to_string(n2s[i]), n2s[i], 1.0 / mu);
        compare(row, std::to_string(n2s[i] / 2), "1/4", paper[i][0],
                paper[i][1]);
        rows.push_back(std::move(row));
      }
      break;
    }
    case Table::kV: {
      for (int twice_a : {8, 9, 10}) {
        const int n = twice_a;  // n = 2a
        SchemeRow row;
        if (twice_a % 2 == 0) {
          const int a = twice_a / 2;
          row = ex42_params(n, a, 2, 1, n, a, 2, 1);
          const double f = stirling_binomial_estimate(n, a);
          row.F_estimate = f * f;
        } else {
          // a = 4.5: only K and R = (n - a)^2 have a meaning.
          const BigCount k = binomial(n, 2);
          row.K = k * k;
          row.R = Rational(n * 2 - twice_a, 2) * Rational(n * 2 - twice_a, 2);
          const double f = stirling_binomial_estimate(n, n / 2.0);
          row.F_estimate = f * f;
          row.note = "a is not an integer; F and 1-M/N left empty";
        }
        row.label = twice_a % 2 == 0 ? "a=" + std::to_string(twice_a / 2)
                                     : "a=" + std::to_string(twice_a / 2) + ".5";
        static const std::map<int, std::pair<std::string, std::string>> kPaper = {
            {8, {"784", "5215"}}, {9, {"1296", "18542"}}, {10, {"2025", "66754"}}};
        const std::string r = twice_a == 8 ? "16" : twice_a == 9 ? "20.25" : "25";
        compare(row, kPaper.at(twice_a).first, "1/4", kPaper.at(twice_a).second, r);
        if (twice_a % 2 != 0) row.divergence.push_back("non_integral");
        rows.push_back(std::move(row));
      }
      break;
    }
    case Table::kVI: {
      const std::pair<int, const char*> spec[] = {
          {540, "1637369"}, {792, "44564986"}, {1092, "1230404836"}};
      for (const auto& [n2, f] : spec) {
        SchemeRow row =
            component_row("n^2=" + std::to_string(n2), n2, 0.5);
        compare(row, std::to_string(n2 / 2), "1/4", f, "1");
        rows.push_back(std::move(row));
      }
      break;
    }
    case Table::kVII: {
      const char* paper[][2] = {{"270", "703"}, {"396", "2152"}, {"546", "6679"}};
      for (int i = 0; i < 3; ++i) {
        const int n = 10 + 2 * i;
        SchemeRow row = ex50_params(n, n / 2, 2, 6);
        row.F_estimate = 6.0 * stirling_binomial_estimate(n, n / 2.0);
        compare(row, paper[i][0], "1/4", paper[i][1], "7.77");
        rows.push_back(std::move(row));
      }
      break;
    }
    case Table::kVIII: {
      const int spec[][4] = {{24, 2, 17, 3}, {60, 2, 44, 3}, {96, 2, 71, 3}};
      const char* paper[][2] = {{"48", "2^19"}, {"120", "2^46"}, {"192", "2^73"}};
      for (int i = 0; i < 3; ++i) {
        SchemeRow row = tang_params(spec[i][0], spec[i][1], spec[i][2], spec[i][3]);
        compare(row, paper[i][0], "3/8", paper[i][1], "3/4");
        if (i == 1) row.note += "; published tuple lists x=4, the least x is 3";
        rows.push_back(std::move(row));
      }
      break;
    }
    case Table::kIX: {
      const int spec[][4] = {{4, 2, 5, 3}, {10, 2, 14, 3}, {16, 2, 23, 3}};
      const char* paper[][2] = {
          {"48", "3*2^7"}, {"120", "3*2^16"}, {"192", "3*2^25"}};
      for (int i = 0; i < 3; ++i) {
        SchemeRow row =
            tang_cycle_params(spec[i][0], spec[i][1], spec[i][2], spec[i][3], 6);
        compare(row, paper[i][0], "3/8", paper[i][1], "2");
        rows.push_back(std::move(row));
      }
      break;
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SchemeRow>& rows,
               bool estimate) {
  out << "label,K,one_minus_MN,F,R,paper_value,divergence";
  if (estimate) out << ",F_estimate";
  out << '\n';
  for (const SchemeRow& row : rows) {
    out << row.label << ',' << (row.K ? row.K->str() : "") << ','
        << (row.one_minus_ratio ? to_string(*row.one_minus_ratio) : "") << ','
        << (row.F ? row.F->str() : "") << ',' << (row.R ? to_string(*row.R) : "")
        << ',' << row.paper_value << ',';
    for (std::size_t i = 0; i < row.divergence.size(); ++i) {
      out << (i ? ";" : "") << row.divergence[i];
    }
    if (estimate) {
      out << ',';
      if (row.F_estimate) {
        std::ostringstream f;
        f.precision(10);
        f << *row.F_estimate;
        out << f.str();
      }
    }
    out << '\n';
  }
}

}  // namespace pdakit
