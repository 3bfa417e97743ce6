// SPDX-License-Identifier: Apache-2.0

#include "egyptian/egyptian_rep.hpp"

#include "egyptian/errors.hpp"

namespace egyptian {

EgyptianRep::EgyptianRep(std::vector<Integer> denominators)
    : denominators_(std::move(denominators)) {
  Integer prev = 0;
  for (const auto& m : denominators_) {
    if (m <= prev) {
      throw InvalidArgument("denominators must be strictly increasing positive integers");
    }
    prev = m;
  }
}

Integer EgyptianRep::max_denominator() const {
  return denominators_.empty() ? Integer(0) : denominators_.back();
}

Rational EgyptianRep::value() const {
  mpq_class acc(0);
  for (const auto& m : denominators_) {
    mpq_class u(1, m);
    acc += u;
  }
  return Rational(acc.get_num(), acc.get_den());
}

EgyptianRep EgyptianRep::extended(const Integer& m) const {
  if (m <= max_denominator()) {
    throw InvalidArgument("appended denominator must exceed " + to_string(max_denominator()));
  }
  EgyptianRep out = *this;
  out.denominators_.push_back(m);
  return out;
}

std::string EgyptianRep::str() const {
  std::string out;
  for (const auto& m : denominators_) {
    if (!out.empty()) out += ' ';
    out += to_string(m);
  }
  return out;
}

std::strong_ordering operator<=>(const EgyptianRep& a, const EgyptianRep& b) {
  const auto& x = a.denominators_;
  const auto& y = b.denominators_;
  for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
    if (const int c = cmp(x[k], y[k]); c != 0) return c <=> 0;
  }
  return x.size() <=> y.size();
}

Rational harmonic(unsigned n) {
  std::vector<Integer> ms;
  ms.reserve(n);
  for (unsigned k = 1; k <= n; ++k) ms.emplace_back(k);
  return EgyptianRep(std::move(ms)).value();
}

Rational rep_value(const std::vector<Integer>& denominators) {
  return EgyptianRep(denominators).value();
}

}  // namespace egyptian
