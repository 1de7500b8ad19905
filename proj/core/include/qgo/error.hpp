// Copyright 2026 The qgo Authors
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

namespace qgo {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unsupported user input (bad QASM, bad topology, bad flags).
class InputError : public Error {
  public:
    using Error::Error;
};

/// An internal contract was broken. Indicates a bug, not bad input.
class InvariantError : public Error {
  public:
    using Error::Error;
};

/// QASM syntax or semantic error with the offending source location.
class ParseError : public InputError {
  public:
    ParseError(int line, std::string token, const std::string &message)
        : InputError("line " + std::to_string(line) + ", near '" + token +
                     "': " + message),
          line_(line), token_(std::move(token)) {}

    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] const std::string &token() const noexcept { return token_; }

  private:
    int line_;
    std::string token_;
};

} // namespace qgo
