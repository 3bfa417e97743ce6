// SPDX-License-Identifier: Apache-2.0

#include "egyptian/statistics.hpp"

#include <cmath>
#include <limits>

#include "egyptian/errors.hpp"

namespace egyptian {

namespace {

Rational from_double(double v) {
  mpq_class q(v);
  return Rational(q.get_num(), q.get_den());
}

}  // namespace

Rational z99_squared() {
  // 2.5758293035489004^2 = 6.63489660102121...; rounded up.
  return Rational(Integer("6634896601021214", 10), Integer("1000000000000000", 10));
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw InvalidArgument("wilson_interval: no trials");
  if (successes > trials) throw InvalidArgument("wilson_interval: successes > trials");
  const long double n = static_cast<long double>(trials);
  const long double p = static_cast<long double>(successes) / n;
  const long double z2 = static_cast<long double>(z) * z;
  const long double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const long double half =
      (static_cast<long double>(z) / (1 + z2 / n)) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  double lo = static_cast<double>(centre - half);
  double hi = static_cast<double>(centre + half);
  lo = std::nextafter(std::nextafter(lo, -1.0), -1.0);
  hi = std::nextafter(std::nextafter(hi, 2.0), 2.0);
  if (lo < 0 || successes == 0) lo = 0;
  if (hi > 1 || successes == trials) hi = 1;
  return {from_double(lo), from_double(hi)};
}

bool wilson_contains(std::uint64_t successes, std::uint64_t trials, const Rational& p,
                     const Rational& z_squared) {
  if (trials == 0) throw InvalidArgument("wilson_contains: no trials");
  const Rational n{Integer(std::to_string(trials), 10)};
  const Rational phat = Rational(Integer(std::to_string(successes), 10)) / n;
  const Rational d = phat - p;
  return n * d * d <= z_squared * p * (Rational(1) - p);
}

bool overlaps(const WilsonInterval& a, const WilsonInterval& b) {
  return !(a.upper < b.lower || b.upper < a.lower);
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t range) {
  if (range == 0) throw InvalidArgument("uniform_index: empty range");
  // 2^64 mod range, computed without 128-bit arithmetic.
  const std::uint64_t excess = (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - excess;
  while (true) {
    const std::uint64_t v = rng();
    // Values above `limit` belong to the incomplete final block.
    if (excess != 0 && v > limit) continue;
    return 1 + v % range;
  }
}

}  // namespace egyptian
