// Copyright 2026 The Authors.
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

#include <stdexcept>
#include <string>

namespace tropsch {

// Base for conditions a caller may sensibly catch.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: bad arguments, violated preconditions, malformed files.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but exceeds a configured size cap.
class CapError : public Error {
 public:
  using Error::Error;
};

// Text input rejected at a specific position.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, int line, int col)
      : UsageError(what + " (line " + std::to_string(line) + ", column " +
                   std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace tropsch
