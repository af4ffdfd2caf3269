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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdakit {

// Base of every error the library throws.
class PdaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (parameter range, shape, ...).
class PreconditionError : public PdaError {
 public:
  using PdaError::PdaError;
};

// An operation that needs a valid PDA was handed an invalid one.
class InvalidPdaError : public PdaError {
 public:
  using PdaError::PdaError;
};

// Text PDA file that does not follow the format. Line and column are 1-based.
class ParseError : public PdaError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : PdaError("line " + std::to_string(line) + ", column " +
                 std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Grid whose colors are not dense: `missing` lies in 1..max but never occurs.
class ColorGapError : public PdaError {
 public:
  explicit ColorGapError(int missing)
      : PdaError("color " + std::to_string(missing) +
                 " is missing from the grid"),
        missing_(missing) {}

  int missing() const { return missing_; }

 private:
  int missing_;
};

// Raised when a result that the theory guarantees turns out wrong, e.g. a
// user of a valid PDA fails to decode. Always a bug.
class InvariantBreach : public PdaError {
 public:
  using PdaError::PdaError;
};

}  // namespace pdakit
