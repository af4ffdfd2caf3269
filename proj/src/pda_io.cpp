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

#include "pdakit/pda_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "pdakit/errors.hpp"

namespace pdakit {
namespace {

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  if (text.empty()) throw ParseError(1, 1, "empty input");
  if (text.back() != '\n') {
    std::size_t line = 1, col = 1;
    for (char ch : text) {
      if (ch == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, "missing trailing newline");
  }
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    lines.push_back({text.substr(start, end - start), lines.size() + 1});
    start = end + 1;
  }
  return lines;
}

// Parses a positive decimal (no sign, no leading '+'); returns false if the
// whole token is not one.
bool parse_count(std::string_view tok, std::size_t& out) {
  if (tok.empty() || tok.front() < '0' || tok.front() > '9') return false;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && end == tok.data() + tok.size();
}

struct Header {
  std::size_t K, F, Z, S;
  std::size_t column[4];  // where each value starts, for error messages
};

Header parse_header(const Line& line) {
  static constexpr const char* kKeys[4] = {"K=", "F=", "Z=", "S="};
  Header h{};
  std::size_t* fields[4] = {&h.K, &h.F, &h.Z, &h.S};
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    if (i > 0) {
      if (pos >= line.text.size() || line.text[pos] != ' ') {
        throw ParseError(line.number, pos + 1, "expected a single space");
      }
      ++pos;
    }
    if (line.text.substr(pos, 2) != kKeys[i]) {
      throw ParseError(line.number, pos + 1,
                       std::string("expected '") + kKeys[i] + "'");
    }
    pos += 2;
    const std::size_t end = std::min(line.text.find(' ', pos), line.text.size());
    if (!parse_count(line.text.substr(pos, end - pos), *fields[i])) {
      throw ParseError(line.number, pos + 1, "expected a non-negative integer");
    }
    h.column[i] = pos + 1;
    pos = end;
  }
  if (pos != line.text.size()) {
    throw ParseError(line.number, pos + 1, "trailing characters in header");
  }
  return h;
}

}  // namespace

PdaArray read_pda(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines[0].text != "pda v1") {
    throw ParseError(1, 1, "expected 'pda v1'");
  }
  if (lines.size() < 2) throw ParseError(2, 1, "missing header line");
  const Header h = parse_header(lines[1]);
  if (h.K == 0) throw ParseError(2, h.column[0], "K must be positive");
  if (h.F == 0) throw ParseError(2, h.column[1], "F must be positive");
  if (lines.size() != 2 + h.F) {
    const std::size_t where = std::min(lines.size(), 2 + h.F) + 1;
    throw ParseError(where, 1,
                     "expected " + std::to_string(h.F) + " grid lines, found " +
                         std::to_string(lines.size() - 2));
  }

  std::vector<PdaEntry> grid;
  grid.reserve(h.F * h.K);
  for (std::size_t r = 0; r < h.F; ++r) {
    const Line& line = lines[2 + r];
    std::size_t pos = 0;
    for (std::size_t c = 0; c < h.K; ++c) {
      if (c > 0) {
        if (pos >= line.text.size() || line.text[pos] != ' ') {
          throw ParseError(line.number, pos + 1,
                           "expected " + std::to_string(h.K) +
                               " tokens separated by single spaces");
        }
        ++pos;
      }
      const std::size_t end = std::min(line.text.find(' ', pos), line.text.size());
      const std::string_view tok = line.text.substr(pos, end - pos);
      std::size_t value = 0;
      if (tok == "*") {
        grid.push_back(PdaEntry::star());
      } else if (parse_count(tok, value) && value >= 1 && value <= h.S) {
        grid.push_back(PdaEntry::color(static_cast<int>(value)));
      } else {
        throw ParseError(line.number, pos + 1,
                         "bad token '" + std::string(tok) +
                             "' (expected '*' or an integer in 1.." +
                             std::to_string(h.S) + ")");
      }
      pos = end;
    }
    if (pos != line.text.size()) {
      throw ParseError(line.number, pos + 1, "more than K tokens on the line");
    }
  }

  PdaArray p(h.F, h.K, std::move(grid));  // may throw ColorGapError
  if (p.colors() != h.S) {
    // Tokens are bounded by S, so this only happens when S itself is unused.
    throw ColorGapError(static_cast<int>(h.S));
  }
  const std::size_t z = p.stars_in_column(0);
  if (z != h.Z) {
    throw ParseError(2, h.column[2],
                     "header says Z=" + std::to_string(h.Z) +
                         " but column 1 holds " + std::to_string(z) + " stars");
  }
  return p;
}

std::string write_pda(const PdaArray& p) {
  const PdaArray q = p.canonical_colors();
  std::ostringstream out;
  out << "pda v1\n"
      << "K=" << q.cols() << " F=" << q.rows() << " Z=" << q.stars_in_column(0)
      << " S=" << q.colors() << "\n"
      << q.grid_text();
  return out.str();
}

PdaArray read_pda_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_pda(buf.str());
}

void write_pda_file(const std::filesystem::path& path, const PdaArray& p) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw PdaError("cannot write " + path.string());
  out << write_pda(p);
  if (!out) throw PdaError("write failed for " + path.string());
}

}  // namespace pdakit
