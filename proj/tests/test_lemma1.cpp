// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "egyptian/errors.hpp"
#include "egyptian/greedy.hpp"
#include "egyptian/lemma1.hpp"
#include "egyptian/search.hpp"
#include "oracles.hpp"

using namespace egyptian;

namespace {

Rational unit(long m) { return Rational::unit(Integer(m)); }

bool greedy_is_best(const Rational& y) {
  return oracle::best_two_term(y) == greedy_underapprox(y, 2).value();
}

}  // namespace

TEST_SUITE("lemma1") {
  TEST_CASE("x_k values") {
    CHECK(xk(1000, 0) == Rational(Integer(1001000)));
    CHECK(xk(1000, 1) == Rational(Integer(1001000) * 1001002, Integer(1000998)));
    CHECK(xk(2, 0) == Rational(6));
    CHECK_THROWS_AS(xk(1000, 100101), InvalidArgument);
    CHECK_NOTHROW(xk(1000, 100100));
    CHECK_THROWS_AS(xk(1, 0), InvalidArgument);
  }

  TEST_CASE("rewrite identity") {
    const long i = 1000;
    CHECK(unit(i + 1) + unit(i * (i + 1) / 2 + 7) == unit(i) + xk(i, 7).reciprocal());
    std::mt19937_64 rng(1);
    for (long ii : {10L, 57L, 300L, 1000L}) {
      const long kmax = ii * (ii + 1) / 10;
      for (int s = 0; s < 20; ++s) {
        const long k = static_cast<long>(rng() % (kmax + 1));
        CHECK(unit(ii + 1) + unit(ii * (ii + 1) / 2 + k) == unit(ii) + xk(ii, k).reciprocal());
      }
    }
  }

  TEST_CASE("spacing and difference window at i = 1000") {
    const std::uint64_t i = 1000;
    const std::uint64_t n = i * (i + 1);
    for (std::uint64_t k = 0; k + 1 <= n / 10; k += 997) CHECK(xk(i, k + 1) - xk(i, k) > 1);
    const std::uint64_t l_lo = (n + 99) / 100, l_hi = 3 * n / 200;
    for (std::uint64_t l = l_lo; l <= l_hi; l += 101) {
      const Rational d = xk(i, 2 * l + 1) - xk(i, 2 * l);
      CHECK(d >= Rational(Integer(13), Integer(3)));
      CHECK(d <= Rational(Integer(14), Integer(3)));
    }
  }

  TEST_CASE("paper mode at i = 1000") {
    const Lemma1Report r = lemma1_certificate(1000, Lemma1Mode::paper);
    // l runs over [ceil(1001000/100), floor(3 * 1001000/200)] = [10010, 15015].
    CHECK(r.selected_count == 5006);
    CHECK(r.k_range_max == 100100);
    CHECK(r.interval_length == Rational::unit(Integer(999000)));
    CHECK(r.certified_measure * 1000 > r.interval_length);
    CHECK(r.pass);
    CHECK_THROWS_AS(lemma1_certificate(999, Lemma1Mode::paper), InvalidArgument);
  }

  TEST_CASE("mode ordering for small i") {
    for (std::uint64_t i = 2; i <= 40; ++i) {
      const Lemma1Report d = lemma1_certificate(i, Lemma1Mode::direct);
      const Lemma1Report e = lemma1_certificate(i, Lemma1Mode::exact);
      CAPTURE(i);
      CHECK(d.certified_measure <= e.certified_measure);
      CHECK(e.certified_measure == nongreedy_two_term_measure(i));
    }
  }

  TEST_CASE("exact measure agrees with the sorted-sum oracle") {
    for (std::int64_t i = 2; i <= 30; ++i) {
      CAPTURE(i);
      CHECK(nongreedy_two_term_measure(static_cast<std::uint64_t>(i)) == oracle::nongreedy_by_sorted_sums(i));
    }
    CHECK(nongreedy_two_term_measure(50) == oracle::nongreedy_by_sorted_sums(50));
  }

  TEST_CASE("frozen exact values") {
    // From oracle::nongreedy_by_sorted_sums.
    CHECK(nongreedy_two_term_measure(2) == Rational(0));
    CHECK(nongreedy_two_term_measure(3) == Rational(Integer(19), Integer(1680)));
    CHECK(nongreedy_two_term_measure(4) == Rational(Integer(12280355), Integer(2014037872)));
    const Integer scale("1000000000000");
    const std::pair<std::uint64_t, const char*> ratios[] = {
        {5, "118349923124"}, {10, "100365291205"}, {20, "111412496462"}, {50, "119941604488"}};
    for (const auto& [i, digits] : ratios) {
      const Lemma1Report r = lemma1_certificate(i, Lemma1Mode::exact);
      CHECK((r.ratio * Rational(scale)).floor() == Integer(digits));
    }
  }

  TEST_CASE("parts are sorted, disjoint and non-greedy") {
    for (std::uint64_t i : {3u, 7u, 12u}) {
      const auto parts = nongreedy_parts(i);
      Rational total;
      const Rational lo = unit(static_cast<long>(i)), hi = unit(static_cast<long>(i) - 1);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        CHECK(parts[k].lower < parts[k].upper);
        CHECK(parts[k].lower >= lo);
        CHECK(parts[k].upper <= hi);
        if (k > 0) CHECK(parts[k - 1].upper <= parts[k].lower);
        total += parts[k].upper - parts[k].lower;
        const Rational mid = (parts[k].lower + parts[k].upper) / 2;
        CHECK_FALSE(greedy_is_best(mid));
        CHECK_FALSE(greedy_is_best(parts[k].upper));
      }
      CHECK(total == nongreedy_two_term_measure(i));
    }
  }

  TEST_CASE("membership matches pointwise classification") {
    std::mt19937_64 rng(77);
    for (std::uint64_t i : {4u, 10u}) {
      const auto parts = nongreedy_parts(i);
      const Rational lo = unit(static_cast<long>(i)), width = unit(static_cast<long>(i * (i - 1)));
      for (int s = 0; s < 400; ++s) {
        const Rational y = lo + width * Rational(Integer(static_cast<long>(rng() % 1000000) + 1), Integer(1000000));
        bool inside = false;
        for (const auto& p : parts) inside = inside || (p.lower < y && y <= p.upper);
        CAPTURE(y.str());
        CHECK(inside == !greedy_is_best(y));
        CHECK(inside == (best_underapprox(y, 2).value > greedy_underapprox(y, 2).value()));
      }
    }
  }

  TEST_CASE("right-part midpoints are non-greedy at i = 1000") {
    std::mt19937_64 rng(5);
    const std::uint64_t i = 1000;
    int tested = 0;
    while (tested < 100) {
      const std::uint64_t k = rng() % (i * (i + 1) / 10 + 1);
      const Rational x = xk(i, k);
      if (x.is_integer()) continue;
      ++tested;
      const Rational base = unit(static_cast<long>(i));
      const Rational mid = base + (x.reciprocal() + Rational::unit(x.floor())) / 2;
      const Rational greedy = greedy_underapprox(mid, 2).value();
      CHECK(best_underapprox(mid, 2).value > greedy);
      CHECK(oracle::best_two_term(mid) > greedy);
    }
  }

  TEST_CASE("threads do not change results") {
    const Lemma1Report a = lemma1_certificate(300, Lemma1Mode::direct, {1});
    const Lemma1Report b = lemma1_certificate(300, Lemma1Mode::direct, {3});
    CHECK(a.certified_measure == b.certified_measure);
    CHECK(a.selected_count == b.selected_count);
    const Lemma1Report c = lemma1_certificate(120, Lemma1Mode::exact, {1});
    const Lemma1Report d = lemma1_certificate(120, Lemma1Mode::exact, {4});
    CHECK(c.certified_measure == d.certified_measure);
  }

  TEST_CASE("modes and limits") {
    CHECK(parse_lemma1_mode("paper") == Lemma1Mode::paper);
    CHECK(parse_lemma1_mode("exact") == Lemma1Mode::exact);
    CHECK(to_string(Lemma1Mode::direct) == "direct");
    CHECK_THROWS_AS(parse_lemma1_mode("fast"), InvalidArgument);
    CHECK_THROWS_AS(nongreedy_two_term_measure(1), InvalidArgument);
    CHECK_THROWS_AS(nongreedy_two_term_measure(kMaxExactI + 1), ResourceLimit);
    CHECK_THROWS_AS(lemma1_certificate(1, Lemma1Mode::direct), InvalidArgument);
  }
}
