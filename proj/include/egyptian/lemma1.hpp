// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egyptian/rational.hpp"

namespace egyptian {

// Certifies, in exact arithmetic, how much of (1/i, 1/(i-1)] consists of
// points whose best two-term underapproximation beats the greedy one
// 1/i + 1/j.
//
// Candidate sums 1/(i+1) + 1/(i(i+1)/2 + k) rewrite as 1/i + 1/x_k with
//   x_k = i(i+1) (i(i+1) + 2k) / (i(i+1) - 2k),   0 <= k <= floor(i(i+1)/10).
// Each sits in the greedy cell (1/i + 1/j_k, 1/i + 1/(j_k - 1)],
// j_k = floor(x_k) + 1, and every point of the right part
// (1/i + 1/x_k, 1/i + 1/floor(x_k)] is non-greedy.
enum class Lemma1Mode {
  paper,   // the pair-selection argument over l in [i(i+1)/100, 3i(i+1)/200]
  direct,  // all right parts with x_k not an integer
  exact,   // the full non-greedy set
};

std::string to_string(Lemma1Mode mode);
// Throws InvalidArgument for anything but "paper", "direct" or "exact".
Lemma1Mode parse_lemma1_mode(std::string_view text);

struct Lemma1Report {
  std::uint64_t i = 0;
  Lemma1Mode mode = Lemma1Mode::paper;
  std::uint64_t k_range_max = 0;       // floor(i(i+1)/10)
  std::uint64_t selected_count = 0;    // paper: |L|; direct: non-integer x_k; exact: cells hit
  Rational certified_measure;          // lower bound (paper, direct) or exact value
  Rational interval_length;            // 1/((i-1)i)
  Rational ratio;                      // certified_measure / interval_length
  bool pass = false;                   // ratio >= 1/1000
};

struct Lemma1Options {
  unsigned threads = 1;
};

// x_k for 0 <= k <= floor(i(i+1)/10), i >= 2.
Rational xk(std::uint64_t i, std::uint64_t k);

// Runs the certificate. Paper mode needs i >= 1000, the other modes i >= 2.
// A failed inequality throws VerificationFailure naming it and (i, k, l).
Lemma1Report lemma1_certificate(std::uint64_t i, Lemma1Mode mode,
                                const Lemma1Options& options = {});

// Largest i accepted by the exact enumeration (64-bit intermediate bound).
inline constexpr std::uint64_t kMaxExactI = 40'000;

// Exact measure of { y in (1/i, 1/(i-1)] : best two-term value of y > greedy }.
Rational nongreedy_two_term_measure(std::uint64_t i);

// The same set as a sorted list of disjoint intervals (lower, upper].
struct NongreedyPart {
  Rational lower;
  Rational upper;
};
std::vector<NongreedyPart> nongreedy_parts(std::uint64_t i);

}  // namespace egyptian
