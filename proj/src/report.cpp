// SPDX-License-Identifier: Apache-2.0

#include "egyptian/report.hpp"

#include <ostream>

#include "egyptian/errors.hpp"

namespace egyptian::report {

namespace {

Json integer(const Integer& z) {
  if (z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64) {
    return Json(std::stoull(to_string(z)));
  }
  return Json(to_string(z));
}

Json optional_level(const std::optional<unsigned>& level) {
  return level ? Json(*level) : Json(nullptr);
}

const char* verdict_name(SampleRecord::Verdict v) {
  switch (v) {
    case SampleRecord::Verdict::pass: return "pass";
    case SampleRecord::Verdict::fail: return "fail";
    case SampleRecord::Verdict::undecided: return "undecided";
  }
  return "?";
}

}  // namespace

Json rational(const Rational& r) { return r.str(); }

Json denominators(const EgyptianRep& rep) {
  Json out = Json::array();
  for (const auto& m : rep.denominators()) out.push_back(integer(m));
  return out;
}

Json greedy(const EgyptianRep& rep, const Rational& x) {
  const Rational value = rep.value();
  return Json{{"rep", denominators(rep)}, {"value", rational(value)}, {"gap", rational(x - value)}};
}

Json best(const BestUnderapprox& best) {
  return Json{{"value", rational(best.value)}, {"rep", denominators(best.rep)}};
}

Json cell(const Cell& c) {
  Json out{{"level", c.level()}, {"lower", rational(c.lower())}};
  if (c.bounded()) {
    out["upper"] = rational(*c.upper());
    out["length"] = rational(c.length());
    out["best_rep"] = denominators(c.best_rep());
  } else {
    out["upper"] = "+inf";
    out["length"] = nullptr;
    out["best_rep"] = nullptr;
  }
  return out;
}

Json window(const CellWindow& w) {
  Json cells = Json::array();
  for (const auto& c : w.cells) cells.push_back(cell(c));
  return Json{{"a", rational(w.window_lower)},
              {"b", rational(w.window_upper)},
              {"cells", std::move(cells)},
              {"covered", rational(w.covered())},
              {"uncovered", rational(w.uncovered)}};
}

Json regular(const Rational& x, unsigned n, const Rational& value) {
  return Json{{"x", rational(x)}, {"n", n}, {"value", rational(value)},
              {"distance", rational(value - x)}};
}

Json chain(const ChainReport& c) {
  Json values = Json::array();
  for (const auto& v : c.best_values) values.push_back(rational(v));
  Json diffs = Json::array();
  for (const auto& d : c.diffs) diffs.push_back(rational(d));
  return Json{{"x", rational(c.x)},
              {"n0", c.n0},
              {"t", c.t},
              {"verdict", c.pass ? "pass" : "fail"},
              {"failure_level", optional_level(c.failure_level)},
              {"best_values", std::move(values)},
              {"diffs", std::move(diffs)},
              {"base_rep", c.base_rep ? denominators(*c.base_rep) : Json(nullptr)}};
}

Json lemma1(const Lemma1Report& r) {
  return Json{{"i", r.i},
              {"mode", to_string(r.mode)},
              {"k_range_max", r.k_range_max},
              {"selected_count", r.selected_count},
              {"certified_measure", rational(r.certified_measure)},
              {"interval_length", rational(r.interval_length)},
              {"ratio", rational(r.ratio)},
              {"pass", r.pass}};
}

Json nongreedy(std::uint64_t i, const Rational& measure) {
  const Rational length = Rational::unit(Integer(std::to_string(i - 1), 10) * Integer(std::to_string(i), 10));
  return Json{{"i", i},
              {"measure", rational(measure)},
              {"interval_length", rational(length)},
              {"ratio", rational(measure / length)}};
}

Json decay(const DecayReport& r, const Cell& c) {
  auto range = [](std::uint64_t from, std::uint64_t to) {
    return from <= to ? Json::array({from, to}) : Json(nullptr);
  };
  Json out{{"cell", cell(c)},
           {"i0", r.i0},
           {"i_max", r.i_max},
           {"exceptional", rational(r.exceptional)},
           {"tail", rational(r.tail)},
           {"subtracted", rational(r.subtracted)},
           {"collision_bound", integer(r.collision_bound)},
           {"exact_slices", range(r.exact_from, r.exact_to)},
           {"lemma_slices", range(r.lemma_from, r.lemma_to)},
           {"tail_dominated", r.tail_dominated},
           {"lower", rational(r.enclosure.lower)},
           {"upper", rational(r.enclosure.upper)},
           {"ratio", rational(r.ratio)}};
  out["meets_1999_2000"] = r.meets_decay_constant ? Json(*r.meets_decay_constant) : Json(nullptr);
  return out;
}

Json density(const DensityEstimate& e) {
  return Json{{"s", e.s},
              {"t", e.t},
              {"count", e.count},
              {"seed", e.seed},
              {"bits", e.bits},
              {"passed", e.passed},
              {"undecided", e.undecided},
              {"fraction", rational(e.fraction)},
              {"wilson99", Json::array({rational(e.wilson99.lower), rational(e.wilson99.upper)})}};
}

void cells_csv(std::ostream& os, const std::vector<Cell>& cells) {
  os << "level,lower,upper,length,best_rep\n";
  for (const auto& c : cells) {
    os << c.level() << ',' << c.lower() << ',';
    if (c.bounded()) {
      os << *c.upper() << ',' << c.length() << ',' << c.best_rep().str();
    } else {
      os << "+inf,,";
    }
    os << '\n';
  }
}

void samples_csv(std::ostream& os, const std::vector<SampleRecord>& samples) {
  os << "x,verdict,failure_level\n";
  for (const auto& s : samples) {
    os << s.x << ',' << verdict_name(s.verdict) << ',';
    if (s.failure_level) os << *s.failure_level;
    os << '\n';
  }
}

Rational parse_rational(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("expected a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

}  // namespace egyptian::report
