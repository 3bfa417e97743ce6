// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "egyptian/egyptian_rep.hpp"
#include "egyptian/partition.hpp"
#include "egyptian/rational.hpp"
#include "egyptian/search.hpp"
#include "egyptian/statistics.hpp"

namespace egyptian {

// Whether the best underapproximations of x at levels n0..t extend one
// another by appending ever larger unit fractions.
//
// A chain exists exactly when every increment best_{n+1} - best_n is a unit
// fraction 1/u_{n+1} with u strictly increasing, and best_{n0} has an
// n0-term representation whose denominators are all below u_{n0+1}.
struct ChainReport {
  Rational x;
  unsigned n0 = 0;
  unsigned t = 0;
  std::vector<Rational> best_values;  // levels n0, n0+1, ... up to t or the failure
  std::vector<Rational> diffs;
  bool pass = false;
  std::optional<unsigned> failure_level;
  std::optional<EgyptianRep> base_rep;
};

ChainReport chain_check(const Rational& x, unsigned n0, unsigned t,
                        const SearchLimits& limits = {});

struct MeasureEnclosure {
  Rational lower;
  Rational upper;
};

struct SampleRecord {
  Rational x;
  enum class Verdict { pass, fail, undecided } verdict = Verdict::undecided;
  std::optional<unsigned> failure_level;
};

struct DensityEstimate {
  unsigned s = 0;
  unsigned t = 0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  unsigned bits = 0;
  std::uint64_t passed = 0;
  std::uint64_t undecided = 0;
  Rational fraction;  // passed / decided samples
  WilsonInterval wilson99;
  std::vector<SampleRecord> samples;
};

struct SamplingOptions {
  unsigned threads = 1;
  SearchLimits limits;
};

// Draws `count` points U / 2^bits with U uniform on [1, floor(H_s 2^bits)]
// from std::mt19937_64(seed) (see uniform_index) and runs chain_check(x, s, t)
// on each. Samples that exhaust the node budget are counted as undecided.
DensityEstimate sample_chain_density(unsigned s, unsigned t, std::uint64_t count,
                                     std::uint64_t seed, unsigned bits,
                                     const SamplingOptions& options = {});

// sample_chain_density for several t over one sample set. Each chain is
// walked once up to the largest t; entry k equals
// sample_chain_density(s, ts[k], count, seed, bits, options).
std::vector<DensityEstimate> sample_chain_density_sweep(unsigned s, const std::vector<unsigned>& ts,
                                                        std::uint64_t count, std::uint64_t seed,
                                                        unsigned bits,
                                                        const SamplingOptions& options = {});

// How each slice I_i = q + (1/i, 1/(i-1)] of a cell was bounded.
enum class SliceBound {
  none,            // counted as fully surviving
  exact,           // exact non-greedy measure subtracted
  lemma_constant,  // i >= 1000: one thousandth of the slice subtracted
};

struct DecayOptions {
  // Slices i0+1 .. i0+exact_slices use the exact non-greedy measure.
  std::uint64_t exact_slices = 4;
  SearchLimits limits;
};

struct DecayReport {
  MeasureEnclosure enclosure;  // survivors through levels t+1 and t+2
  Rational cell_length;
  std::uint64_t i0 = 0;       // smallest i with 1/i < cell length
  std::uint64_t i_max = 0;
  Rational exceptional;       // |I'| = length - 1/i0
  Rational tail;              // 1/i_max
  Rational subtracted;        // certified non-greedy measure removed
  // Slices with i <= this value may collide with the cell's representation
  // and are counted as surviving.
  Integer collision_bound;
  std::uint64_t exact_from = 0, exact_to = 0;  // empty when exact_from > exact_to
  std::uint64_t lemma_from = 0, lemma_to = 0;  // empty when lemma_from > lemma_to
  bool tail_dominated = false;                 // i_max <= i0
  Rational ratio;                              // enclosure.upper / cell_length
  // Only claimed for i0 >= 1000: ratio <= 1999/2000.
  std::optional<bool> meets_decay_constant;

  SliceBound slice_bound(std::uint64_t i) const;
};

// Upper bound on the part of a bounded level-t cell (q, r] whose chain can
// continue through levels t+1 and t+2. The cell splits into the exceptional
// piece (q + 1/i0, r] and slices q + (1/i, 1/(i-1)] for i > i0. A surviving
// point y of slice i has best_{t+1}(y) = q + 1/i and y - q must have a
// greedy best two-term underapproximation, so the non-greedy part of the
// slice is removed. Slices with i > i_max are counted whole (1/i_max).
DecayReport cell_decay_bound(const Cell& cell, std::uint64_t i_max,
                             const DecayOptions& options = {});

// Slice index i with y - q in (1/i, 1/(i-1)], for y > q.
std::uint64_t slice_index(const Rational& q, const Rational& y);

}  // namespace egyptian
