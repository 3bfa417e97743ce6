// SPDX-License-Identifier: Apache-2.0

#include "egyptian/rational.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "egyptian/errors.hpp"

namespace egyptian {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InvalidArgument("zero denominator");
  q_.get_num() = numerator;
  q_.get_den() = denominator;
  q_.canonicalize();
}

Rational Rational::unit(const Integer& m) { return Rational(Integer(1), m); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw InvalidArgument("bad denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::reciprocal() const {
  if (sign() == 0) throw InvalidArgument("reciprocal of zero");
  return Rational(den(), num());
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw InvalidArgument("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational exact_sum(std::span<const Rational> terms) {
  if (terms.empty()) return Rational();
  std::vector<Rational> level(terms.begin(), terms.end());
  while (level.size() > 1) {
    std::vector<Rational> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < level.size(); k += 2) {
      next.push_back(level[k] + level[k + 1]);
    }
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return std::move(level.front());
}

}  // namespace egyptian
