// Copyright 2026 The gadgetc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace gadgetc {

/// Malformed text input (Hamiltonian, circuit or matrix files).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &message, int line = 0)
        : std::runtime_error(line > 0
                                 ? "line " + std::to_string(line) + ": " +
                                       message
                                 : message),
          line_(line) {}

    [[nodiscard]] int line() const noexcept { return line_; }

  private:
    int line_;
};

/// Input is well formed but violates a structural requirement (interaction
/// set, self-inverse gate, gadget error bound, qubit-count mismatch).
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dense realization requested above the configured qubit cap.
class SizeLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Iterative eigensolver exhausted its matrix-vector budget.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &message, long iterations)
        : std::runtime_error(message + " (after " +
                             std::to_string(iterations) + " iterations)"),
          iterations_(iterations) {}

    [[nodiscard]] long iterations() const noexcept { return iterations_; }

  private:
    long iterations_;
};

} // namespace gadgetc
