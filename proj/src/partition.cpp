// SPDX-License-Identifier: Apache-2.0

#include "egyptian/partition.hpp"

#include <stdexcept>
#include <string>

#include "egyptian/errors.hpp"

namespace egyptian {

Rational max_cell_length(unsigned n) {
  return Rational::unit(Integer(n) * (n + 1));
}

Cell::Cell(unsigned level, Rational lower, Rational upper, EgyptianRep best_rep)
    : level_(level),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      best_rep_(std::move(best_rep)) {
  if (level_ == 0) throw std::logic_error("cell: level must be positive");
  if (!(lower_ < *upper_)) {
    throw std::logic_error("cell: empty interval (" + lower_.str() + ", " + upper_->str() + "]");
  }
  if (*upper_ - lower_ > max_cell_length(level_)) {
    throw std::logic_error("cell (" + lower_.str() + ", " + upper_->str() +
                           "] is longer than 1/(n(n+1)) at level " + std::to_string(level_));
  }
}

Cell Cell::unbounded(unsigned level) {
  if (level == 0) throw std::logic_error("cell: level must be positive");
  Cell c;
  c.level_ = level;
  c.lower_ = harmonic(level);
  return c;
}

Rational Cell::length() const {
  if (!upper_) throw InvalidArgument("unbounded cell has no length");
  return *upper_ - lower_;
}

bool Cell::contains(const Rational& x) const {
  return lower_ < x && (!upper_ || x <= *upper_);
}

bool Cell::within(const Cell& outer) const {
  if (lower_ < outer.lower_) return false;
  if (!outer.upper_) return true;
  return upper_ && *upper_ <= *outer.upper_;
}

Cell cell_of(const Rational& x, unsigned n, const SearchLimits& limits) {
  if (x.sign() <= 0) throw InvalidArgument("cell_of: x must be positive");
  if (n == 0) throw InvalidArgument("cell_of: n must be positive");
  if (x > harmonic(n)) return Cell::unbounded(n);
  BestUnderapprox best = best_underapprox(x, n, limits);
  // A best value is never a shorter sum, so the validity checks of
  // next_point_above are redundant here.
  Rational upper = cell_upper(best.value, x, n, limits);
  return Cell(n, std::move(best.value), std::move(upper), std::move(best.rep));
}

Rational CellWindow::covered() const {
  Rational total;
  for (const auto& c : cells) {
    const Rational& lo = c.lower() < window_lower ? window_lower : c.lower();
    const Rational hi = (!c.upper() || window_upper < *c.upper()) ? window_upper : *c.upper();
    if (lo < hi) total += hi - lo;
  }
  return total;
}

CellWindow cells_in_window(const Rational& a, const Rational& b, unsigned n,
                           std::size_t max_cells, const SearchLimits& limits) {
  if (n == 0) throw InvalidArgument("cells_in_window: n must be positive");
  if (!(a.sign() > 0 && a < b && b <= harmonic(n))) {
    throw InvalidArgument("cells_in_window: need 0 < a < b <= H_n");
  }
  CellWindow out{{}, b - a, a, b};
  if (max_cells == 0) return out;
  Cell current = cell_of(b, n, limits);
  while (true) {
    out.cells.push_back(current);
    if (current.lower() <= a || out.cells.size() >= max_cells) break;
    current = cell_of(current.lower(), n, limits);
  }
  const Rational& last = out.cells.back().lower();
  out.uncovered = a < last ? last - a : Rational(0);
  return out;
}

bool refinement_check(const Rational& x, unsigned n, const SearchLimits& limits) {
  if (n < 2) throw InvalidArgument("refinement_check: n must be at least 2");
  return cell_of(x, n, limits).within(cell_of(x, n - 1, limits));
}

namespace {

// Smallest denominator allowed after m inside the constrained tail.
Integer tail_successor(const Integer& m) {
  Integer chained = (m - 1) * m + 1;
  return chained > m ? chained : Integer(m + 1);
}

// Largest possible tail of r terms starting at m: every later term takes
// its minimum.
Rational max_tail(Integer m, unsigned r) {
  Rational acc;
  for (unsigned t = 0; t < r; ++t) {
    acc += Rational::unit(m);
    m = tail_successor(m);
  }
  return acc;
}

// Infimum of { partial + tail >= x } over constrained tails of exactly r
// terms whose first denominator is at least lower.
std::optional<Rational> regular_infimum(const Rational& partial, unsigned r,
                                        const Integer& lower, const Rational& x) {
  // Letting all remaining denominators grow approaches partial from above.
  if (partial >= x) return partial;
  if (r == 0) return std::nullopt;
  const Rational gap = x - partial;
  // For m > hi the whole tail is below 1/(m-1) <= 1/hi < gap.
  const Integer hi = gap.reciprocal().floor() + 1;
  // Subtrees for larger m hold smaller values, so the first feasible m
  // counting down wins. At most two iterations: 1/m >= gap once m < hi.
  for (Integer m = hi < lower ? lower : hi; m >= lower; --m) {
    if (partial + max_tail(m, r) >= x) {
      return regular_infimum(partial + Rational::unit(m), r - 1, tail_successor(m), x);
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_regular(const EgyptianRep& rep) {
  const auto& ms = rep.denominators();
  const std::size_t n = ms.size();
  for (std::size_t l = 0; l <= n; ++l) {
    bool ok = true;
    for (std::size_t k = 0; k < l && ok; ++k) ok = ms[k] == k + 1;
    for (std::size_t k = l; k + 1 < n && ok; ++k) ok = ms[k + 1] >= (ms[k] - 1) * ms[k] + 1;
    if (ok) return true;
  }
  return false;
}

Rational next_regular_above(const Rational& x, unsigned n) {
  if (n == 0) throw InvalidArgument("next_regular_above: n must be positive");
  const Rational h = harmonic(n);
  if (!(x.sign() > 0 && x <= h)) {
    throw InvalidArgument("next_regular_above: need 0 < x <= H_n");
  }
  Rational best = h;
  Rational prefix;
  for (unsigned l = 0; l < n; ++l) {
    if (auto v = regular_infimum(prefix, n - l, Integer(l + 1), x); v && *v < best) {
      best = *v;
    }
    prefix += Rational::unit(Integer(l + 1));
  }
  return best;
}

}  // namespace egyptian
