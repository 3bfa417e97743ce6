// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "egyptian/cli.hpp"
#include "egyptian/report.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "egyptian");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = egyptian::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) {
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("best and greedy") {
    const auto best = json_of(call({"best", "11/24", "2", "--json"}));
    CHECK(best == nlohmann::json::parse(R"({"value":"9/20","rep":[4,5]})"));

    const auto g = json_of(call({"greedy", "1/2", "1", "--json"}));
    CHECK(g["rep"] == nlohmann::json::array({3}));
    CHECK(g["value"] == "1/3");
    CHECK(g["gap"] == "1/6");

    const auto g2 = json_of(call({"greedy", "11/24", "2"}));
    CHECK(g2["rep"] == nlohmann::json::array({3, 9}));
    CHECK(g2["gap"] == "1/72");
  }

  TEST_CASE("big denominators are strings") {
    const auto g = json_of(call({"greedy", "1", "7"}));
    CHECK(g["rep"][5] == 3263443);
    CHECK(g["rep"][6] == 10650056950807ULL);
    const auto g8 = json_of(call({"greedy", "1", "9"}));
    CHECK(g8["rep"][8].is_string());
    CHECK(g8["rep"][8] == "12864938683278671740537145998360961546653259485195807");
  }

  TEST_CASE("cells and regular points") {
    const auto c = json_of(call({"cell", "11/24", "2"}));
    CHECK(c["lower"] == "9/20");
    CHECK(c["upper"] == "11/24");
    CHECK(c["length"] == "1/120");
    CHECK(c["best_rep"] == nlohmann::json::array({4, 5}));
    CHECK(egyptian::report::parse_rational(c["upper"]) ==
          egyptian::Rational::parse("11/24"));

    const auto top = json_of(call({"cell", "2", "2"}));
    CHECK(top["upper"] == "+inf");
    CHECK(top["lower"] == "3/2");

    const auto w = json_of(call({"cells", "1/2", "1", "1"}));
    CHECK(w["cells"].size() == 1);
    CHECK(w["uncovered"] == "0");
    const auto w2 = json_of(call({"cells", "1/3", "1", "1", "--max-cells", "1"}));
    CHECK(w2["cells"].size() == 1);
    CHECK(w2["uncovered"] == "1/6");

    const auto r = json_of(call({"regular", "6001/10000", "2"}));
    CHECK(r["value"] == "11/18");
  }

  TEST_CASE("csv output") {
    const Result c = call({"--csv", "cell", "11/24", "2"});
    REQUIRE(c.code == 0);
    CHECK(c.out == "level,lower,upper,length,best_rep\n2,9/20,11/24,1/120,4 5\n");
    const Result s = call({"--csv", "sample", "1", "2", "--count", "3", "--seed", "5"});
    REQUIRE(s.code == 0);
    CHECK(s.out.rfind("x,verdict,failure_level\n", 0) == 0);
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 4);

    CHECK(call({"--csv", "best", "11/24", "2"}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"--csv", "--json", "cell", "11/24", "2"}).code == egyptian::cli::kInvalidInput);
  }

  TEST_CASE("chain, lemma1, nongreedy, decay") {
    const auto ch = json_of(call({"chain", "11/24", "1", "2"}));
    CHECK(ch["verdict"] == "fail");
    CHECK(ch["failure_level"] == 2);
    CHECK(ch["diffs"] == nlohmann::json::array({"7/60"}));

    const auto l = json_of(call({"lemma1", "1000", "--mode", "paper", "--json"}));
    CHECK(l["pass"] == true);
    CHECK(l["mode"] == "paper");
    CHECK(l["selected_count"] == 5006);

    const auto ng = json_of(call({"nongreedy", "3"}));
    CHECK(ng["measure"] == "19/1680");
    CHECK(ng["ratio"] == "19/280");

    const auto d = json_of(call({"decay", "1/8", "1/7", "1", "--imax", "100"}));
    CHECK(d["i0"] == 57);
    CHECK(d["exact_slices"] == nlohmann::json::array({58, 61}));
    CHECK(d["lemma_slices"].is_null());
    CHECK(d["meets_1999_2000"].is_null());
    CHECK(call({"decay", "1/9", "1/7", "1", "--imax", "100"}).code == egyptian::cli::kInvalidInput);
  }

  TEST_CASE("threads never change output") {
    const std::vector<std::vector<std::string>> cmds = {
        {"sample", "1", "3", "--count", "40", "--seed", "3"},
        {"lemma1", "30", "--mode", "exact"},
        {"lemma1", "30", "--mode", "direct"},
    };
    for (auto cmd : cmds) {
      const Result one = call(cmd);
      cmd.insert(cmd.begin(), {"--threads", "3"});
      const Result three = call(cmd);
      CHECK(one.code == 0);
      CHECK(one.out == three.out);
      CHECK(one.out == call(cmd).out);
    }
  }

  TEST_CASE("exit codes") {
    CHECK(call({}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"frobnicate"}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"best", "0", "2"}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"best", "1/0", "2"}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"best", "abc", "2"}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"best", "1/2", "-1"}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"lemma1", "999", "--mode", "paper"}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"lemma1", "10", "--mode", "fancy"}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"--threads", "0", "best", "1/2", "2"}).code == egyptian::cli::kInvalidInput);
    CHECK(call({"--help"}).code == egyptian::cli::kOk);

    const Result budget = call({"--node-budget", "3", "best", "5/121", "4"});
    CHECK(budget.code == egyptian::cli::kBudgetExhausted);
    CHECK(budget.out.empty());
    CHECK(budget.err.find("budget") != std::string::npos);
  }

  TEST_CASE("EGY_NODE_BUDGET") {
    setenv("EGY_NODE_BUDGET", "3", 1);
    CHECK(call({"best", "5/121", "4"}).code == egyptian::cli::kBudgetExhausted);
    // The flag wins over the environment.
    CHECK(call({"--node-budget", "100000000", "best", "11/24", "3"}).code == 0);
    setenv("EGY_NODE_BUDGET", "zero", 1);
    CHECK(call({"best", "11/24", "2"}).code == egyptian::cli::kInvalidInput);
    unsetenv("EGY_NODE_BUDGET");
    CHECK(call({"best", "11/24", "2"}).code == 0);
  }
}
