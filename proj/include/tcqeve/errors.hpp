// Copyright (c) 2026 The tcqeve authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tcqeve {

/// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, long line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

/// Input data violates a documented invariant (bad index, broken symmetry, ...).
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problem size exceeds a configured cap.
class CapacityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure: singular solve, no real spectrum, violated bound.
class NumericalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inconsistent or incomplete configuration (CLI flags, budgets).
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tcqeve
