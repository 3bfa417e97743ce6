// SPDX-License-Identifier: Apache-2.0

#include "egyptian/lemma1.hpp"

#include <algorithm>
#include <string>

#include "egyptian/errors.hpp"
#include "egyptian/parallel.hpp"

namespace egyptian {

namespace {

using u128 = unsigned __int128;

Integer big(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

std::string at(std::uint64_t i, const char* name, std::uint64_t v) {
  return " (i=" + std::to_string(i) + ", " + name + "=" + std::to_string(v) + ")";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

Rational right_part_length(const Rational& x) {
  return Rational::unit(x.floor()) - x.reciprocal();
}

// The greedy cell of a competitor is indexed by j = floor(x') + 1 where
// competitor = 1/i + 1/x'. Per cell only the smallest competitor (largest
// x') matters.
struct CompetitorCell {
  std::uint64_t j;
  std::uint64_t x_num;  // x' = x_num / x_den, not necessarily reduced
  std::uint64_t x_den;
};

// Enumerates every two-term sum s = 1/a + 1/b, a < b, in (1/i, 1/(i-1)]
// that can beat the greedy value of a point above it:
//   a <= i - 1 gives s > 1/a >= 1/(i-1), which overshoots every point;
//   a == i gives 1/i + 1/b, which never exceeds the greedy value 1/i + 1/j
//     of a point above it, by maximality of the greedy second term;
//   a >= 2i gives s < 2/a <= 1/i.
// So i < a < 2i, and s > 1/i forces b < a i / (a - i).
std::vector<CompetitorCell> competitor_cells(std::uint64_t i) {
  if (i < 2) throw InvalidArgument("non-greedy measure: i must be at least 2");
  if (i > kMaxExactI) {
    throw ResourceLimit("non-greedy measure: i = " + std::to_string(i) +
                        " exceeds the enumeration ceiling " + std::to_string(kMaxExactI));
  }
  std::vector<CompetitorCell> hits;
  for (std::uint64_t a = i + 1; a < 2 * i; ++a) {
    const std::uint64_t d = a - i;
    const std::uint64_t b_max = (a * i - 1) / d;
    // s <= 1/(i-1)  <=>  b (a - i + 1) >= a (i - 1).
    const std::uint64_t b_floor = (a * (i - 1) + d) / (d + 1);
    for (std::uint64_t b = std::max(a + 1, b_floor); b <= b_max; ++b) {
      const std::uint64_t num = a * b * i;
      const std::uint64_t den = i * (a + b) - a * b;
      hits.push_back({num / den + 1, num, den});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const CompetitorCell& u, const CompetitorCell& v) {
    if (u.j != v.j) return u.j < v.j;
    // Larger x' first.
    return u128(u.x_num) * v.x_den > u128(v.x_num) * u.x_den;
  });
  auto last = std::unique(hits.begin(), hits.end(),
                          [](const CompetitorCell& u, const CompetitorCell& v) { return u.j == v.j; });
  hits.erase(last, hits.end());
  return hits;
}

Lemma1Report paper_mode(std::uint64_t i) {
  if (i < 1000) throw InvalidArgument("lemma1 paper mode requires i >= 1000");
  const std::uint64_t n = i * (i + 1);
  const Rational i2{Integer(big(i) * big(i))};
  const std::uint64_t l_lo = (n + 99) / 100;
  const std::uint64_t l_hi = 3 * n / 200;
  const std::uint64_t count = l_hi >= l_lo ? l_hi - l_lo + 1 : 0;
  require(Rational(big(count)) * 200 >= i2,
          "|L| >= i^2/200 fails" + at(i, "count", count));

  const Rational diff_lo(Integer(13), Integer(3));
  const Rational diff_hi(Integer(14), Integer(3));
  const Rational third(Integer(1), Integer(3));
  const Rational x_cap = Rational(Integer(6), Integer(5)) * i2;
  const Rational length_floor = Rational(Integer(25), Integer(108)) / (i2 * i2);

  std::vector<Rational> lengths;
  lengths.reserve(count);
  for (std::uint64_t l = l_lo; l <= l_hi; ++l) {
    const Rational x0 = xk(i, 2 * l);
    const Rational x1 = xk(i, 2 * l + 1);
    const Rational diff = x1 - x0;
    require(diff_lo <= diff && diff <= diff_hi,
            "13/3 <= x_{2l+1} - x_{2l} <= 14/3 fails" + at(i, "l", l));
    const Rational f0 = x0 - Rational(x0.floor());
    const Rational f1 = x1 - Rational(x1.floor());
    std::uint64_t k;
    const Rational* x;
    if (f0 >= third) {
      k = 2 * l, x = &x0;
    } else {
      // Both fractional parts below 1/3 would put diff within 1/3 of an integer.
      require(f1 >= third, "frac(x_{2l}) >= 1/3 or frac(x_{2l+1}) >= 1/3 fails" + at(i, "l", l));
      k = 2 * l + 1, x = &x1;
    }
    require(*x < x_cap, "x_k < (6/5) i^2 fails" + at(i, "k", k));
    Rational len = right_part_length(*x);
    require(len > length_floor, "1/floor(x_k) - 1/x_k > 25/(108 i^4) fails" + at(i, "k", k));
    lengths.push_back(std::move(len));
  }

  Lemma1Report r;
  r.i = i;
  r.mode = Lemma1Mode::paper;
  r.k_range_max = n / 10;
  r.selected_count = count;
  r.certified_measure = exact_sum(lengths);
  r.interval_length = Rational::unit(big(i - 1) * big(i));
  require(r.certified_measure * 1000 > r.interval_length,
          "total > 1/(1000 (i-1) i) fails" + at(i, "count", count));
  return r;
}

Lemma1Report direct_mode(std::uint64_t i, const Lemma1Options& options) {
  if (i < 2) throw InvalidArgument("lemma1 direct mode requires i >= 2");
  const std::uint64_t n = i * (i + 1);
  const std::uint64_t k_max = n / 10;
  const Integer greedy_floor = big(i - 1) * big(i) + 1;
  std::vector<Rational> lengths(k_max + 1);
  parallel_for(k_max + 1, options.threads, [&](std::size_t idx) {
    const std::uint64_t k = idx;
    const Rational x = xk(i, k);
    // Distinct cells: consecutive x_k are more than 1 apart.
    if (k < k_max) {
      require(xk(i, k + 1) - x > 1, "x_{k+1} - x_k > 1 fails" + at(i, "k", k));
    }
    // The cell lies inside (1/i, 1/(i-1)].
    require(x.floor() + 1 > greedy_floor, "j_k > (i-1)i + 1 fails" + at(i, "k", k));
    if (!x.is_integer()) lengths[idx] = right_part_length(x);
  });
  Lemma1Report r;
  r.i = i;
  r.mode = Lemma1Mode::direct;
  r.k_range_max = k_max;
  r.selected_count = static_cast<std::uint64_t>(
      std::count_if(lengths.begin(), lengths.end(), [](const Rational& v) { return v.sign() > 0; }));
  r.certified_measure = exact_sum(lengths);
  r.interval_length = Rational::unit(big(i - 1) * big(i));
  return r;
}

Rational cell_right_part(std::uint64_t i, const CompetitorCell& c, Rational* lower) {
  const Rational base = Rational::unit(big(i));
  const Rational low = base + Rational(big(c.x_den), big(c.x_num));
  const Rational high = base + Rational::unit(big(c.j - 1));
  if (lower) *lower = low;
  return high - low;
}

}  // namespace

std::string to_string(Lemma1Mode mode) {
  switch (mode) {
    case Lemma1Mode::paper: return "paper";
    case Lemma1Mode::direct: return "direct";
    case Lemma1Mode::exact: return "exact";
  }
  return "?";
}

Lemma1Mode parse_lemma1_mode(std::string_view text) {
  if (text == "paper") return Lemma1Mode::paper;
  if (text == "direct") return Lemma1Mode::direct;
  if (text == "exact") return Lemma1Mode::exact;
  throw InvalidArgument("unknown lemma1 mode '" + std::string(text) + "'");
}

Rational xk(std::uint64_t i, std::uint64_t k) {
  if (i < 2) throw InvalidArgument("x_k: i must be at least 2");
  const Integer n = big(i) * big(i + 1);
  if (big(k) > n / 10) {
    throw InvalidArgument("x_k: k = " + std::to_string(k) + " outside [0, floor(i(i+1)/10)]");
  }
  const Integer two_k = 2 * big(k);
  return Rational(n * (n + two_k), n - two_k);
}

Lemma1Report lemma1_certificate(std::uint64_t i, Lemma1Mode mode,
                                const Lemma1Options& options) {
  Lemma1Report r;
  switch (mode) {
    case Lemma1Mode::paper:
      r = paper_mode(i);
      break;
    case Lemma1Mode::direct:
      r = direct_mode(i, options);
      break;
    case Lemma1Mode::exact: {
      if (i < 2) throw InvalidArgument("lemma1 exact mode requires i >= 2");
      const auto cells = competitor_cells(i);
      std::vector<Rational> parts(cells.size());
      parallel_for(cells.size(), options.threads,
                   [&](std::size_t k) { parts[k] = cell_right_part(i, cells[k], nullptr); });
      r.i = i;
      r.mode = mode;
      r.k_range_max = i * (i + 1) / 10;
      r.selected_count = cells.size();
      r.certified_measure = exact_sum(parts);
      r.interval_length = Rational::unit(big(i - 1) * big(i));
      break;
    }
  }
  r.ratio = r.certified_measure / r.interval_length;
  r.pass = r.ratio * 1000 >= 1;
  return r;
}

Rational nongreedy_two_term_measure(std::uint64_t i) {
  const auto cells = competitor_cells(i);
  std::vector<Rational> parts;
  parts.reserve(cells.size());
  for (const auto& c : cells) parts.push_back(cell_right_part(i, c, nullptr));
  return exact_sum(parts);
}

std::vector<NongreedyPart> nongreedy_parts(std::uint64_t i) {
  const auto cells = competitor_cells(i);
  std::vector<NongreedyPart> out;
  out.reserve(cells.size());
  // Cells with larger j lie further left; emit in ascending position.
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    NongreedyPart part;
    Rational len = cell_right_part(i, *it, &part.lower);
    if (len.sign() <= 0) continue;
    part.upper = part.lower + len;
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace egyptian
