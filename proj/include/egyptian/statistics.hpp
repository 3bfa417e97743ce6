// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "egyptian/rational.hpp"

namespace egyptian {

// Two-sided 99% normal quantile and a rational upper approximation of its
// square, used for exact score-test membership.
inline constexpr double kZ99 = 2.5758293035489004;
Rational z99_squared();

struct WilsonInterval {
  Rational lower;
  Rational upper;
};

// Wilson score interval for `successes` out of `trials`. Endpoints are
// computed in floating point and widened outward to rationals, so the
// returned interval contains the real Wilson interval.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z = kZ99);

// Exact membership of p in the Wilson interval: the interval is the set of
// p with trials * (phat - p)^2 <= z^2 p (1 - p).
bool wilson_contains(std::uint64_t successes, std::uint64_t trials, const Rational& p,
                     const Rational& z_squared = z99_squared());

// Two Wilson intervals share a point.
bool overlaps(const WilsonInterval& a, const WilsonInterval& b);

// Uniform integer in [1, range] from a 64-bit Mersenne Twister. Rejection
// sampling on raw 64-bit outputs: v is rejected while v >= 2^64 - (2^64 mod
// range), then 1 + v mod range. Fixed here because std::uniform_int_distribution
// differs between standard libraries.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t range);

}  // namespace egyptian
