// Copyright 2026 The mlgd Authors.
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

#ifndef MLGD_ERRORS_H_
#define MLGD_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlgd {

// Malformed graph or state file. `line()` is 1-based, 0 when the error is not
// tied to a specific line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : ParseError("", line, message) {}
  ParseError(const std::string& source, std::size_t line,
             const std::string& message)
      : std::runtime_error(Format(source, line, message)),
        line_(line),
        message_(message) {}

  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  static std::string Format(const std::string& source, std::size_t line,
                            const std::string& message) {
    std::string out = source.empty() ? "" : source + ": ";
    if (line != 0) out += "line " + std::to_string(line) + ": ";
    return out + message;
  }

  std::size_t line_;
  std::string message_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical routine could not produce a trustworthy result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mlgd

#endif  // MLGD_ERRORS_H_
