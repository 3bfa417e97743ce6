// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "egyptian/egyptian_rep.hpp"
#include "egyptian/rational.hpp"
#include "egyptian/search.hpp"

namespace egyptian {

// One class (q, r] of the level-n partition: every point of the cell has
// best n-term underapproximation q. The single unbounded cell is (H_n, inf).
//
// Construction checks lower < upper, the cell-length bound
// upper - lower <= 1/(n(n+1)) for bounded cells, and lower = H_n for the
// unbounded one; a violation is a logic error.
class Cell {
 public:
  Cell(unsigned level, Rational lower, Rational upper, EgyptianRep best_rep);
  static Cell unbounded(unsigned level);

  unsigned level() const { return level_; }
  const Rational& lower() const { return lower_; }
  // nullopt for the unbounded cell.
  const std::optional<Rational>& upper() const { return upper_; }
  // Empty for the unbounded cell.
  const EgyptianRep& best_rep() const { return best_rep_; }

  bool bounded() const { return upper_.has_value(); }
  // Throws InvalidArgument for the unbounded cell.
  Rational length() const;
  bool contains(const Rational& x) const;
  // Interval inclusion (a, b] within (c, d].
  bool within(const Cell& outer) const;

 private:
  Cell() = default;

  unsigned level_ = 0;
  Rational lower_;
  std::optional<Rational> upper_;
  EgyptianRep best_rep_;
};

// 1/(n(n+1)).
Rational max_cell_length(unsigned n);

Cell cell_of(const Rational& x, unsigned n, const SearchLimits& limits = {});

struct CellWindow {
  std::vector<Cell> cells;  // right to left
  Rational uncovered;       // part of (a, b] not reached
  Rational window_lower;
  Rational window_upper;
  // Measure of (a, b] covered by the emitted cells.
  Rational covered() const;
};

inline constexpr std::size_t kDefaultMaxCells = 10'000;

// Walks the level-n cells covering (a, b] from the right. Left endpoints
// can accumulate, so the walk stops after max_cells and the remainder is
// reported as uncovered.
CellWindow cells_in_window(const Rational& a, const Rational& b, unsigned n,
                           std::size_t max_cells = kDefaultMaxCells,
                           const SearchLimits& limits = {});

bool refinement_check(const Rational& x, unsigned n, const SearchLimits& limits = {});

// A "regular" n-term sum starts with 1, 1/2, ..., 1/l and continues with
// m_{k+1} >= (m_k - 1) m_k + 1 after index l + 1 (0 <= l <= n).
bool is_regular(const EgyptianRep& rep);

// Smallest regular n-term value >= x, taken over the closure of the set:
// when regular values accumulate at a point from above, that point is
// returned. Always within 1/(n(n+1)) of x for 0 < x <= H_n.
Rational next_regular_above(const Rational& x, unsigned n);

}  // namespace egyptian
