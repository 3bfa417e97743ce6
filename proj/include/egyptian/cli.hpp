// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace egyptian::cli {

// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kBudgetExhausted = 3;

// Runs one command. Results go to `out` only on success; diagnostics go to
// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace egyptian::cli
