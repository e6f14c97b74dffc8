// Copyright 2026 The VBE Social Requirements Authors
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

#ifndef VBE_ERRORS_H_
#define VBE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vbe {

// Base class for every error raised by the library. The CLI maps all of
// these to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or contract violation: unknown actor, self-tie, duplicate id,
// missing anchor, invalid search bounds.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed network or requirements text. Line and column are 1-based;
// zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line,
             std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Exhaustive search would examine more subsets than the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace vbe

#endif  // VBE_ERRORS_H_
