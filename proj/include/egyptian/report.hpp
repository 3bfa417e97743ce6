// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include <json.hpp>

#include "egyptian/egyptian_rep.hpp"
#include "egyptian/lemma1.hpp"
#include "egyptian/measure.hpp"
#include "egyptian/partition.hpp"
#include "egyptian/rational.hpp"
#include "egyptian/search.hpp"

// JSON and CSV renderings of every report. Rationals are always strings
// "p/q" (or "p"). Denominator lists are arrays of JSON integers; entries
// that do not fit in 64 bits are written as decimal strings instead.
namespace egyptian::report {

using Json = nlohmann::ordered_json;

Json rational(const Rational& r);
Json denominators(const EgyptianRep& rep);

Json greedy(const EgyptianRep& rep, const Rational& x);
Json best(const BestUnderapprox& best);
Json cell(const Cell& cell);
Json window(const CellWindow& window);
Json regular(const Rational& x, unsigned n, const Rational& value);
Json chain(const ChainReport& chain);
Json lemma1(const Lemma1Report& report);
Json nongreedy(std::uint64_t i, const Rational& measure);
Json decay(const DecayReport& report, const Cell& cell);
Json density(const DensityEstimate& estimate);

// CSV: level,lower,upper,length,best_rep
void cells_csv(std::ostream& os, const std::vector<Cell>& cells);
// CSV: x,verdict,failure_level
void samples_csv(std::ostream& os, const std::vector<SampleRecord>& samples);

// Inverse of rational(); throws InvalidArgument.
Rational parse_rational(const Json& j);

}  // namespace egyptian::report
