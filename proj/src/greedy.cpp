// SPDX-License-Identifier: Apache-2.0

#include "egyptian/greedy.hpp"

#include <string>

#include "egyptian/errors.hpp"

namespace egyptian {

Integer greedy_next_denominator(const Rational& gap) {
  return gap.reciprocal().floor() + 1;
}

EgyptianRep greedy_underapprox(const Rational& x, unsigned n,
                               const GreedyLimits& limits) {
  if (x.sign() <= 0) throw InvalidArgument("greedy: x must be positive");
  if (n > limits.max_terms) {
    throw ResourceLimit("greedy: n = " + std::to_string(n) + " exceeds term cap " +
                        std::to_string(limits.max_terms));
  }
  std::vector<Integer> ms;
  ms.reserve(n);
  Rational gap = x;
  for (unsigned k = 0; k < n; ++k) {
    Integer m = greedy_next_denominator(gap);
    // For m >= 2 the remaining gap is below 1/(m(m-1)), which already forces
    // the next denominator up. Only after m = 1 with x > 2 would the plain
    // recursion repeat a denominator.
    if (!ms.empty() && m <= ms.back()) m = ms.back() + 1;
    gap -= Rational::unit(m);
    ms.push_back(std::move(m));
  }
  return EgyptianRep(std::move(ms));
}

Rational greedy_gap(const Rational& x, unsigned n, const GreedyLimits& limits) {
  return x - greedy_underapprox(x, n, limits).value();
}

}  // namespace egyptian
