// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace egyptian {

using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

// Exact rational number with unbounded numerator and denominator.
//
// Values are always stored in lowest terms with a positive denominator, so
// two equal rationals are structurally identical. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : q_(value) {}
  // Throws InvalidArgument on a zero denominator.
  Rational(const Integer& numerator, const Integer& denominator);

  static Rational unit(const Integer& m);

  // Parses "p/q" or "p" (optional leading '-'). Throws InvalidArgument.
  static Rational parse(std::string_view text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;
  Rational reciprocal() const;
  Rational abs() const;

  // Nearest double; diagnostics only, never used in decisions.
  double to_double() const { return q_.get_d(); }

  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact sum using pairwise (balanced tree) reduction. The result does not
// depend on how the terms were produced, only on their values.
Rational exact_sum(std::span<const Rational> terms);

}  // namespace egyptian
