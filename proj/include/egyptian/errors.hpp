// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace egyptian {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition (exit code 2).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A node budget, term cap or size ceiling was hit. The computation is
// abandoned rather than truncated (exit code 3).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A certificate step failed. The message names the inequality and the
// witness indices.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace egyptian
