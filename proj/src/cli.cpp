// SPDX-License-Identifier: Apache-2.0

#include "egyptian/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "egyptian/errors.hpp"
#include "egyptian/greedy.hpp"
#include "egyptian/lemma1.hpp"
#include "egyptian/measure.hpp"
#include "egyptian/partition.hpp"
#include "egyptian/report.hpp"
#include "egyptian/search.hpp"

namespace egyptian::cli {

namespace {

struct Globals {
  bool json = false;
  bool csv = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned threads = 1;
};

unsigned parse_level(const std::string& text, const char* name) {
  const Integer z = parse_integer(text);
  if (z < 0 || z > 1'000'000) {
    throw InvalidArgument(std::string(name) + " out of range: " + text);
  }
  return static_cast<unsigned>(z.get_ui());
}

std::uint64_t env_node_budget() {
  const char* env = std::getenv("EGY_NODE_BUDGET");
  if (!env || !*env) return kDefaultNodeBudget;
  const Integer z = parse_integer(env);
  if (z <= 0) throw InvalidArgument("EGY_NODE_BUDGET must be positive");
  return std::stoull(to_string(z));
}

void emit_json(std::ostream& os, const report::Json& j) { os << j.dump() << '\n'; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact greedy and best Egyptian underapproximations, partition cells and measure certificates",
               "egyptian"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t node_budget = 0;
  auto* json_flag = app.add_flag("--json", g.json, "JSON output (default)");
  app.add_flag("--csv", g.csv, "CSV output (cell, cells, sample)")->excludes(json_flag);
  app.add_option("--node-budget", node_budget,
                 "Search node budget per call (default 10^7, or EGY_NODE_BUDGET)");
  app.add_option("--threads", g.threads, "Worker threads; never changes any output")
      ->check(CLI::Range(1u, 1024u));

  std::stringstream body;
  std::function<void()> action;
  std::string a1, a2, a3;

  auto limits = [&] { return SearchLimits{g.node_budget}; };
  auto json_only = [&](const char* cmd) {
    if (g.csv) throw InvalidArgument(std::string("--csv is not available for '") + cmd + "'");
  };

  unsigned max_terms = GreedyLimits{}.max_terms;
  auto* greedy_cmd = app.add_subcommand("greedy", "Greedy n-term underapproximation");
  greedy_cmd->add_option("x", a1)->required();
  greedy_cmd->add_option("n", a2)->required();
  greedy_cmd->add_option("--max-terms", max_terms, "Term cap (default 12)");
  greedy_cmd->callback([&] {
    action = [&] {
      json_only("greedy");
      const Rational x = Rational::parse(a1);
      emit_json(body, report::greedy(greedy_underapprox(x, parse_level(a2, "n"), {max_terms}), x));
    };
  });

  auto* best_cmd = app.add_subcommand("best", "Best n-term underapproximation");
  best_cmd->add_option("x", a1)->required();
  best_cmd->add_option("n", a2)->required();
  best_cmd->callback([&] {
    action = [&] {
      json_only("best");
      emit_json(body, report::best(best_underapprox(Rational::parse(a1), parse_level(a2, "n"), limits())));
    };
  });

  auto* cell_cmd = app.add_subcommand("cell", "Partition cell containing x at level n");
  cell_cmd->add_option("x", a1)->required();
  cell_cmd->add_option("n", a2)->required();
  cell_cmd->callback([&] {
    action = [&] {
      const Cell c = cell_of(Rational::parse(a1), parse_level(a2, "n"), limits());
      if (g.csv) {
        report::cells_csv(body, {c});
      } else {
        emit_json(body, report::cell(c));
      }
    };
  });

  std::size_t max_cells = kDefaultMaxCells;
  auto* cells_cmd = app.add_subcommand("cells", "Cells covering the window (a, b] at level n");
  cells_cmd->add_option("a", a1)->required();
  cells_cmd->add_option("b", a2)->required();
  cells_cmd->add_option("n", a3)->required();
  cells_cmd->add_option("--max-cells", max_cells, "Cell budget (default 10^4)");
  cells_cmd->callback([&] {
    action = [&] {
      const CellWindow w = cells_in_window(Rational::parse(a1), Rational::parse(a2),
                                           parse_level(a3, "n"), max_cells, limits());
      if (g.csv) {
        report::cells_csv(body, w.cells);
      } else {
        emit_json(body, report::window(w));
      }
    };
  });

  auto* regular_cmd = app.add_subcommand("regular", "Smallest regular n-term value >= x");
  regular_cmd->add_option("x", a1)->required();
  regular_cmd->add_option("n", a2)->required();
  regular_cmd->callback([&] {
    action = [&] {
      json_only("regular");
      const Rational x = Rational::parse(a1);
      const unsigned n = parse_level(a2, "n");
      emit_json(body, report::regular(x, n, next_regular_above(x, n)));
    };
  });

  auto* chain_cmd = app.add_subcommand("chain", "Chain check of best underapproximations n0..t");
  chain_cmd->add_option("x", a1)->required();
  chain_cmd->add_option("n0", a2)->required();
  chain_cmd->add_option("t", a3)->required();
  chain_cmd->callback([&] {
    action = [&] {
      json_only("chain");
      emit_json(body, report::chain(chain_check(Rational::parse(a1), parse_level(a2, "n0"),
                                                parse_level(a3, "t"), limits())));
    };
  });

  std::string mode = "paper";
  auto* lemma_cmd = app.add_subcommand("lemma1", "Non-greedy two-term measure certificate");
  lemma_cmd->add_option("i", a1)->required();
  lemma_cmd->add_option("--mode", mode, "paper | direct | exact")
      ->check(CLI::IsMember({"paper", "direct", "exact"}));
  lemma_cmd->callback([&] {
    action = [&] {
      json_only("lemma1");
      const Lemma1Report r = lemma1_certificate(parse_level(a1, "i"), parse_lemma1_mode(mode),
                                                Lemma1Options{g.threads});
      emit_json(body, report::lemma1(r));
    };
  });

  auto* nongreedy_cmd = app.add_subcommand("nongreedy", "Exact non-greedy two-term measure in (1/i, 1/(i-1)]");
  nongreedy_cmd->add_option("i", a1)->required();
  nongreedy_cmd->callback([&] {
    action = [&] {
      json_only("nongreedy");
      const unsigned i = parse_level(a1, "i");
      emit_json(body, report::nongreedy(i, nongreedy_two_term_measure(i)));
    };
  });

  std::uint64_t i_max = 0;
  std::uint64_t exact_slices = DecayOptions{}.exact_slices;
  auto* decay_cmd = app.add_subcommand("decay", "Survivor bound for the level-t cell (q, r]");
  decay_cmd->add_option("q", a1)->required();
  decay_cmd->add_option("r", a2)->required();
  decay_cmd->add_option("t", a3)->required();
  decay_cmd->add_option("--imax", i_max, "Last slice treated individually")->required();
  decay_cmd->add_option("--exact-slices", exact_slices, "Slices with exact non-greedy measure (default 4)");
  decay_cmd->callback([&] {
    action = [&] {
      json_only("decay");
      const Rational q = Rational::parse(a1);
      const Rational r = Rational::parse(a2);
      const unsigned t = parse_level(a3, "t");
      if (!(q.sign() > 0 && q < r)) throw InvalidArgument("decay: need 0 < q < r");
      const Cell c = cell_of(r, t, limits());
      if (!c.bounded() || c.lower() != q || *c.upper() != r) {
        throw InvalidArgument("decay: (" + q.str() + ", " + r.str() + "] is not a level-" +
                              std::to_string(t) + " cell");
      }
      emit_json(body, report::decay(cell_decay_bound(c, i_max, {exact_slices, limits()}), c));
    };
  });

  std::uint64_t count = 1000, seed = 0;
  unsigned bits = 32;
  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo chain density over (0, H_s]");
  sample_cmd->add_option("s", a1)->required();
  sample_cmd->add_option("t", a2)->required();
  sample_cmd->add_option("--count", count, "Number of samples (default 1000)");
  sample_cmd->add_option("--seed", seed, "mt19937_64 seed (default 0)");
  sample_cmd->add_option("--bits", bits, "Samples are multiples of 2^-bits (default 32)");
  sample_cmd->callback([&] {
    action = [&] {
      const DensityEstimate e = sample_chain_density(parse_level(a1, "s"), parse_level(a2, "t"),
                                                     count, seed, bits, {g.threads, limits()});
      if (g.csv) {
        report::samples_csv(body, e.samples);
      } else {
        emit_json(body, report::density(e));
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    g.node_budget = node_budget > 0 ? node_budget : env_node_budget();
    action();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  out << body.str();
  return kOk;
}

}  // namespace egyptian::cli
