// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "egyptian/rational.hpp"

namespace egyptian {

// A sum of distinct unit fractions 1/m_1 + ... + 1/m_n, stored as the
// strictly increasing denominator list. The empty list is the 0-term sum.
class EgyptianRep {
 public:
  EgyptianRep() = default;
  // Throws InvalidArgument unless 0 < m_1 < m_2 < ... < m_n.
  explicit EgyptianRep(std::vector<Integer> denominators);

  const std::vector<Integer>& denominators() const { return denominators_; }
  std::size_t size() const { return denominators_.size(); }
  bool empty() const { return denominators_.empty(); }
  // Largest denominator; 0 for the empty representation.
  Integer max_denominator() const;

  Rational value() const;

  // Returns a copy with m appended. Throws if m does not exceed the last
  // denominator.
  EgyptianRep extended(const Integer& m) const;

  // Space separated denominators, e.g. "2 3 7".
  std::string str() const;

  friend bool operator==(const EgyptianRep&, const EgyptianRep&) = default;
  // Lexicographic on the denominator tuple.
  friend std::strong_ordering operator<=>(const EgyptianRep& a,
                                          const EgyptianRep& b);

 private:
  std::vector<Integer> denominators_;
};

// H_n = 1 + 1/2 + ... + 1/n; H_0 = 0.
Rational harmonic(unsigned n);

// Exact value of a denominator list; rejects lists that are not strictly
// increasing positive integers.
Rational rep_value(const std::vector<Integer>& denominators);

}  // namespace egyptian
