// SPDX-License-Identifier: Apache-2.0

#include "egyptian/measure.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "egyptian/errors.hpp"
#include "egyptian/lemma1.hpp"
#include "egyptian/parallel.hpp"

namespace egyptian {

namespace {

Integer big(std::uint64_t v) { return Integer(std::to_string(v), 10); }

std::uint64_t to_u64(const Integer& z, const char* what) {
  if (z < 0 || z > Integer(std::to_string(std::numeric_limits<std::uint64_t>::max() / 2), 10)) {
    throw ResourceLimit(std::string(what) + ": index " + to_string(z) + " out of range");
  }
  return std::stoull(to_string(z));
}

// Sum of |I_i| = 1/((i-1)i) over from <= i <= to, which telescopes.
Rational slice_span(std::uint64_t from, std::uint64_t to) {
  if (from > to) return Rational();
  return Rational::unit(big(from - 1)) - Rational::unit(big(to));
}

}  // namespace

namespace {

// chain_check with progress: `level` names the level being computed, so a
// ResourceLimit escaping from here happened at that level.
ChainReport walk_chain(const Rational& x, unsigned n0, unsigned t, const SearchLimits& limits,
                       unsigned& level) {
  if (x.sign() <= 0) throw InvalidArgument("chain_check: x must be positive");
  if (n0 >= t) throw InvalidArgument("chain_check: need n0 < t");
  if (n0 >= 1 && x > harmonic(n0)) throw InvalidArgument("chain_check: need x <= H_n0");

  ChainReport r;
  r.x = x;
  r.n0 = n0;
  r.t = t;
  level = n0;
  BestUnderapprox base = best_underapprox(x, n0, limits);
  r.best_values.push_back(base.value);
  Integer last_unit = 0;
  for (unsigned n = n0 + 1; n <= t; ++n) {
    level = n;
    Rational v = best_underapprox(x, n, limits).value;
    Rational diff = v - r.best_values.back();
    r.best_values.push_back(std::move(v));
    r.diffs.push_back(diff);
    if (diff.num() != 1 || diff.den() <= last_unit) {
      r.failure_level = n;
      return r;
    }
    last_unit = diff.den();
    if (n == n0 + 1) {
      // The first appended unit must be larger than the base denominators.
      if (base.rep.max_denominator() < last_unit) {
        r.base_rep = base.rep;
      } else if (n0 > 0) {
        r.base_rep = has_representation(base.value, n0, Integer(last_unit - 1), limits);
      } else {
        r.base_rep = EgyptianRep();
      }
      if (!r.base_rep) {
        r.failure_level = n;
        return r;
      }
    }
  }
  r.pass = true;
  return r;
}

// What one walk up to t_max says about chain_check(x, s, t) for t <= t_max.
struct ChainOutcome {
  std::optional<unsigned> failure_level;
  std::optional<unsigned> exhausted_level;

  SampleRecord::Verdict verdict_at(unsigned t) const {
    if (failure_level && *failure_level <= t) return SampleRecord::Verdict::fail;
    if (exhausted_level && *exhausted_level <= t) return SampleRecord::Verdict::undecided;
    return SampleRecord::Verdict::pass;
  }
};

}  // namespace

ChainReport chain_check(const Rational& x, unsigned n0, unsigned t, const SearchLimits& limits) {
  unsigned level = 0;
  return walk_chain(x, n0, t, limits, level);
}

std::vector<DensityEstimate> sample_chain_density_sweep(unsigned s, const std::vector<unsigned>& ts,
                                                        std::uint64_t count, std::uint64_t seed,
                                                        unsigned bits,
                                                        const SamplingOptions& options) {
  if (s < 1) throw InvalidArgument("sample_chain_density: s must be at least 1");
  if (ts.empty()) throw InvalidArgument("sample_chain_density: no t given");
  for (unsigned t : ts) {
    if (t <= s) throw InvalidArgument("sample_chain_density: need t > s");
  }
  if (count < 1) throw InvalidArgument("sample_chain_density: count must be positive");
  if (bits < 16 || bits > 60) throw InvalidArgument("sample_chain_density: bits must be in [16, 60]");
  const unsigned t_max = *std::max_element(ts.begin(), ts.end());

  const Integer scale = Integer(1) << bits;
  const Integer range_z = (harmonic(s) * Rational(scale)).floor();
  const std::uint64_t range = to_u64(range_z, "sample_chain_density");

  // Draw every point up front so the sample set is independent of threading.
  std::vector<Rational> xs(count);
  std::mt19937_64 rng(seed);
  for (auto& x : xs) x = Rational(big(uniform_index(rng, range)), scale);

  std::vector<ChainOutcome> outcomes(count);
  parallel_for(count, options.threads, [&](std::size_t k) {
    unsigned level = 0;
    try {
      outcomes[k].failure_level = walk_chain(xs[k], s, t_max, options.limits, level).failure_level;
    } catch (const ResourceLimit&) {
      outcomes[k].exhausted_level = level;
    }
  });

  std::vector<DensityEstimate> out;
  for (unsigned t : ts) {
    DensityEstimate est;
    est.s = s;
    est.t = t;
    est.count = count;
    est.seed = seed;
    est.bits = bits;
    est.samples.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      SampleRecord& sample = est.samples[k];
      sample.x = xs[k];
      sample.verdict = outcomes[k].verdict_at(t);
      if (sample.verdict == SampleRecord::Verdict::fail) sample.failure_level = outcomes[k].failure_level;
      if (sample.verdict == SampleRecord::Verdict::pass) ++est.passed;
      if (sample.verdict == SampleRecord::Verdict::undecided) ++est.undecided;
    }
    const std::uint64_t decided = count - est.undecided;
    if (decided == 0) {
      throw ResourceLimit("sample_chain_density: every sample exhausted the node budget");
    }
    est.fraction = Rational(big(est.passed), big(decided));
    est.wilson99 = wilson_interval(est.passed, decided);
    out.push_back(std::move(est));
  }
  return out;
}

DensityEstimate sample_chain_density(unsigned s, unsigned t, std::uint64_t count,
                                     std::uint64_t seed, unsigned bits,
                                     const SamplingOptions& options) {
  return std::move(sample_chain_density_sweep(s, {t}, count, seed, bits, options).front());
}

std::uint64_t slice_index(const Rational& q, const Rational& y) {
  if (!(q < y)) throw InvalidArgument("slice_index: need y > q");
  return to_u64((y - q).reciprocal().floor() + 1, "slice_index");
}

SliceBound DecayReport::slice_bound(std::uint64_t i) const {
  if (i >= exact_from && i <= exact_to) return SliceBound::exact;
  if (i >= lemma_from && i <= lemma_to) return SliceBound::lemma_constant;
  return SliceBound::none;
}

DecayReport cell_decay_bound(const Cell& cell, std::uint64_t i_max, const DecayOptions& options) {
  if (!cell.bounded()) throw InvalidArgument("cell_decay_bound: cell must be bounded");
  DecayReport r;
  r.cell_length = cell.length();
  r.i0 = to_u64(r.cell_length.reciprocal().floor() + 1, "cell_decay_bound");
  r.i_max = i_max;
  r.exceptional = r.cell_length - Rational::unit(big(r.i0));
  r.collision_bound = cell.best_rep().max_denominator();
  r.exact_from = r.lemma_from = 1;
  r.exact_to = r.lemma_to = 0;

  if (i_max <= r.i0) {
    // Everything beyond I' is tail.
    r.tail_dominated = true;
    r.tail = Rational::unit(big(r.i0));
    r.enclosure = {Rational(), r.cell_length};
    r.ratio = Rational(1);
    return r;
  }
  r.tail = Rational::unit(big(i_max));

  // Slice i may only be trimmed when i exceeds every denominator of the
  // cell's representation q: then q + 1/i and q + 1/a + 1/b (i < a < b)
  // are valid sums with one and two more terms.
  std::uint64_t first = r.i0 + 1;
  if (r.collision_bound >= big(first)) {
    first = to_u64(r.collision_bound + 1, "cell_decay_bound");
  }
  std::vector<Rational> removed;
  if (first <= i_max) {
    const std::uint64_t exact_end = std::min(i_max, r.i0 + options.exact_slices);
    if (first <= exact_end) {
      r.exact_from = first;
      r.exact_to = exact_end;
      for (std::uint64_t i = first; i <= exact_end; ++i) {
        removed.push_back(nongreedy_two_term_measure(i));
      }
    }
    const std::uint64_t lemma_start = std::max<std::uint64_t>({first, exact_end + 1, 1000});
    if (lemma_start <= i_max) {
      r.lemma_from = lemma_start;
      r.lemma_to = i_max;
      removed.push_back(slice_span(lemma_start, i_max) / Rational(1000));
    }
  }
  r.subtracted = exact_sum(removed);
  r.enclosure = {Rational(), r.cell_length - r.subtracted};
  r.ratio = r.enclosure.upper / r.cell_length;
  if (r.i0 >= 1000) {
    r.meets_decay_constant = r.ratio <= Rational(Integer(1999), Integer(2000));
  }
  return r;
}

}  // namespace egyptian
