// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "egyptian/egyptian_rep.hpp"
#include "egyptian/rational.hpp"

namespace egyptian {

struct GreedyLimits {
  // Denominators roughly square at every step, so n is capped.
  unsigned max_terms = 12;
};

// Greedy n-term underapproximation: m_k = floor(1/(x - partial)) + 1.
// The value is strictly below x. Throws InvalidArgument for x <= 0 and
// ResourceLimit for n above the cap.
EgyptianRep greedy_underapprox(const Rational& x, unsigned n,
                               const GreedyLimits& limits = {});

// x minus the greedy n-term value; always positive.
Rational greedy_gap(const Rational& x, unsigned n,
                    const GreedyLimits& limits = {});

// The next greedy denominator for a positive gap.
Integer greedy_next_denominator(const Rational& gap);

}  // namespace egyptian
