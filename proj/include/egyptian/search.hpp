// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "egyptian/egyptian_rep.hpp"
#include "egyptian/errors.hpp"
#include "egyptian/rational.hpp"

namespace egyptian {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchLimits {
  // Maximum number of expanded nodes per call. Exhaustion raises
  // ResourceLimit; there is no approximate fallback.
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct BestUnderapprox {
  Rational value;
  EgyptianRep rep;  // lexicographically smallest tuple attaining value
};

// Largest n-term Egyptian sum strictly below x.
//
// Depth-first branch and bound over increasing denominators. The incumbent
// starts at the greedy value. At a node with partial sum p, r terms still to
// choose and last denominator m, a candidate next denominator m' is tried
// only while p + 1/m' + ... + 1/(m'+r-1) can still reach the incumbent, and
// m' > 1/(x-p) keeps every partial sum below x.
BestUnderapprox best_underapprox(const Rational& x, unsigned n,
                                 const SearchLimits& limits = {});

// A j-term representation of q using denominators <= max_denom (unbounded
// when absent), or nullopt. The witness is the lexicographically smallest.
std::optional<EgyptianRep> has_representation(
    const Rational& q, unsigned j, const std::optional<Integer>& max_denom = std::nullopt,
    const SearchLimits& limits = {});

// Raised when next_point_above receives a q that cannot be a best n-term
// value, i.e. q is not an n-term sum or is also a shorter sum.
class PreconditionViolation : public InvalidArgument {
 public:
  PreconditionViolation(const std::string& what, std::optional<EgyptianRep> witness)
      : InvalidArgument(what), witness_(std::move(witness)) {}
  const std::optional<EgyptianRep>& witness() const { return witness_; }

 private:
  std::optional<EgyptianRep> witness_;
};

// Smallest j-term Egyptian sum above q over all 1 <= j <= n. For a best
// n-term value q this is the right endpoint of its partition cell.
Rational next_point_above(const Rational& q, unsigned n,
                          const SearchLimits& limits = {});

// Same search without validating q. The caller guarantees that q has no
// representation with fewer than n terms (e.g. q came from
// best_underapprox). Also used for q that are not n-term sums at all.
Rational next_point_above_unchecked(const Rational& q, unsigned n,
                                    const SearchLimits& limits = {});

// next_point_above_unchecked(q, n) for q = best_underapprox(x, n).value.
// Since no sum lies in (q, x), the search stops once it meets x.
Rational cell_upper(const Rational& q, const Rational& x, unsigned n,
                    const SearchLimits& limits = {});

}  // namespace egyptian
