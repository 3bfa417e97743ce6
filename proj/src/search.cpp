// SPDX-License-Identifier: Apache-2.0

#include "egyptian/search.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "egyptian/greedy.hpp"

namespace egyptian {

namespace {

class NodeCounter {
 public:
  NodeCounter(const SearchLimits& limits, const char* what)
      : budget_(limits.node_budget), what_(what) {}

  void tick() {
    if (++used_ > budget_) {
      throw ResourceLimit(std::string(what_) + ": node budget of " +
                          std::to_string(budget_) + " exhausted");
    }
  }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  const char* what_;
};

// 1/m + 1/(m+1) + ... + 1/(m+r-1).
Rational consecutive_tail(const Integer& m, unsigned r) {
  mpq_class acc(0);
  for (unsigned t = 0; t < r; ++t) {
    mpq_class u(1, m + t);
    acc += u;
  }
  return Rational(acc.get_num(), acc.get_den());
}

Integer max_integer(const Integer& a, const Integer& b) { return a < b ? b : a; }

// Approximate magnitude of z, safe for values far outside double range.
long double approx(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

long double approx(const Rational& q) {
  return approx(q.num()) / approx(q.den());
}

// The remaining gap x - partial is carried as an unreduced pair u/v so that
// the inner loops never pay for a gcd. Only strict improvements are taken:
// the search visits tuples in lexicographic order and the greedy tuple is the
// first leaf, so the first tuple reaching a value is the smallest one.
class BestSearch {
 public:
  BestSearch(const Rational& x, unsigned n, const SearchLimits& limits)
      : x_(x), n_(n), counter_(limits, "best_underapprox") {}

  BestUnderapprox run() {
    EgyptianRep greedy = greedy_underapprox(x_, n_, GreedyLimits{n_});
    set_incumbent(x_ - greedy.value());
    best_ = greedy.denominators();
    prefix_.reserve(n_);
    descend(x_.num(), x_.den(), Integer(0), n_);
    return {x_ - deficit_, EgyptianRep(best_)};
  }

 private:
  void set_incumbent(Rational deficit) {
    deficit_ = std::move(deficit);
    deficit_approx_ = approx(deficit_);
    ++version_;
  }

  enum class Hint { below, above, unsure };

  // Where an estimate of some deficit lies relative to the incumbent; the
  // estimates carry a relative error far below the margin used here.
  Hint classify(long double est) const {
    if (est > deficit_approx_ * (1.0L + 1e-9L)) return Hint::above;
    if (est < deficit_approx_ * (1.0L - 1e-9L)) return Hint::below;
    return Hint::unsure;
  }

  bool exact_below(const Integer& num, const Integer& den) const {
    return num * deficit_.den() < deficit_.num() * den;
  }

  bool improves(const Integer& num, const Integer& den) const {
    const Hint hint = classify(approx(num) / approx(den));
    if (hint != Hint::unsure) return hint == Hint::below;
    return exact_below(num, den);
  }

  void take(const Integer& num, const Integer& den) {
    set_incumbent(Rational(num, den));
    best_ = prefix_;
  }

  // Bounds on the next denominator m' given r terms to place: every
  // completion is at most r/m', so m' <= `hard` is necessary, while
  // m' <= `easy` guarantees p + 1/m' + ... + 1/(m'+r-1) beats the incumbent.
  struct Window {
    std::uint64_t version = 0;
    bool unbounded = false;
    Integer hard, easy;
  };

  void refresh(Window& w, const Integer& u, const Integer& v, unsigned r) const {
    if (w.version == version_) return;
    w.version = version_;
    // inc - partial = u/v - deficit.
    const Rational room = Rational(u, v) - deficit_;
    if (room.sign() <= 0) {
      w.unbounded = true;
      return;
    }
    w.unbounded = false;
    const Integer c = (Rational(static_cast<long>(r)) / room).ceil();
    w.hard = c - 1;
    w.easy = c - r;
  }

  bool worth_trying(Window& w, const Integer& u, const Integer& v, const Integer& m,
                    unsigned r) const {
    refresh(w, u, v, r);
    if (w.unbounded || m <= w.easy) return true;
    if (m > w.hard) return false;
    return consecutive_tail(m, r) > Rational(u, v) - deficit_;
  }

  void descend(const Integer& u, const Integer& v, const Integer& last, unsigned r) {
    counter_.tick();
    Integer lo = v / u + 1;
    if (lo <= last) lo = last + 1;
    if (r == 1) {
      // The largest admissible last term is the smallest denominator.
      const Integer num = u * lo - v;
      const Integer den = v * lo;
      if (improves(num, den)) {
        prefix_.push_back(lo);
        take(num, den);
        prefix_.pop_back();
      }
      return;
    }
    if (r == 2) {
      pairs(u, v, lo, false);
      return;
    }
    Window w;
    Integer um = u * lo - v;  // gap after 1/m is um/vm
    Integer vm = v * lo;
    Integer rem;
    for (Integer m = lo;; ++m, um += u, vm += v) {
      if (!worth_trying(w, u, v, m, r)) break;
      if (r == 3 && um <= v) {
        // The child's first pair term is floor(vm/um) + 1 > m; rule the
        // child out here when its pair bounds already fail.
        mpz_tdiv_r(rem.get_mpz_t(), vm.get_mpz_t(), um.get_mpz_t());
        const long double um_ld = approx(um);
        const long double vm_ld = approx(vm);
        const long double A_ld = um_ld - approx(rem);
        if (hopeless_pairs(um_ld, vm_ld, A_ld, vm_ld * (vm_ld + A_ld) / um_ld, true)) {
          counter_.tick();
          continue;
        }
      }
      prefix_.push_back(m);
      descend(um, vm, m, r - 1);
      prefix_.pop_back();
    }
  }

  // True when no pair with a >= lo (A = u lo - v, va = v lo) can beat the
  // incumbent. For a <= 2v/u the bound A / (va (va + A)) is unimodal in a, so
  // its minimum sits at an end of that range; beyond 2v/u the pair is forced
  // to b = a + 1 and the deficit is at least 1/(v a (a + 1)) with
  // a < 2/(u/v - deficit).
  bool hopeless_pairs(long double u_ld, long double v_ld, long double A_ld, long double va_ld,
                      bool rising) const {
    const long double h = u_ld / v_ld;
    const long double room = h - deficit_approx_;
    if (room < h / 2) return false;
    const long double need = deficit_approx_ * (1.0L + 1e-6L);
    if (rising) {
      if (A_ld / (va_ld * (va_ld + A_ld)) < need) return false;
      if (u_ld * u_ld / (2 * v_ld * v_ld * (2 * v_ld + u_ld)) < need) return false;
    }
    const long double a_end = 2 / room;
    return 1 / (v_ld * a_end * (a_end + 1)) >= need;
  }

  // Last two terms 1/a + 1/b below the gap u/v with a >= lo. For each a the
  // best b is forced, so only a is enumerated.
  void pairs(const Integer& u, const Integer& v, const Integer& lo, bool reduced) {
    Window w;
    Integer a = lo;
    Integer A = u * a - v;  // gap after 1/a is A/(v a)
    Integer va = v * a;
    if (hopeless_pairs(approx(u), approx(v), approx(A), approx(va), A <= v)) return;
    if (!reduced) {
      // A reduced gap sharpens every deficit bound below.
      Integer g;
      mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
      if (g != 1) return pairs(u / g, v / g, lo, true);
    }
    Integer q, rem, num, den;
    std::optional<Integer> rising_end;
    for (;; ++a, A += u, va += v) {
      refresh(w, u, v, 2);
      if (!w.unbounded && a > w.hard) return;
      counter_.tick();
      // num >= 1 and b <= va/A + 1 give deficit >= A / (va (va + A)). As a
      // function of a this rises up to a* = (v/u)(1 + sqrt(v/(u+v))), so once
      // it reaches the incumbent every a up to a* is hopeless.
      const long double A_ld = approx(A);
      const long double va_ld = approx(va);
      // The bound needs b = floor(va/A) + 1 > a, i.e. A <= v.
      Hint hint = A <= v ? classify(A_ld / (va_ld * (va_ld + A_ld))) : Hint::below;
      if (hint == Hint::unsure) {
        mpz_add(den.get_mpz_t(), va.get_mpz_t(), A.get_mpz_t());
        mpz_mul(den.get_mpz_t(), den.get_mpz_t(), va.get_mpz_t());
        hint = exact_below(A, den) ? Hint::below : Hint::above;
      }
      if (hint == Hint::above) {
        if (!rising_end) {
          const Integer r3 = v * v * v / (u * u * (u + v));
          Integer root;
          mpz_sqrt(root.get_mpz_t(), r3.get_mpz_t());
          rising_end = v / u + root - 1;  // <= a*
        }
        if (a < *rising_end) {
          a = *rising_end;
          A = u * a - v;
          va = v * a;
        }
        continue;
      }
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), va.get_mpz_t(), A.get_mpz_t());
      mpz_add_ui(q.get_mpz_t(), q.get_mpz_t(), 1);  // q is now b
      if (q > a) {
        mpz_sub(num.get_mpz_t(), A.get_mpz_t(), rem.get_mpz_t());
      } else {
        q = a + 1;
        num = A * q - va;
      }
      hint = classify(approx(num) / (va_ld * approx(q)));
      if (hint == Hint::above) continue;
      mpz_mul(den.get_mpz_t(), va.get_mpz_t(), q.get_mpz_t());
      if (exact_below(num, den)) {
        prefix_.push_back(a);
        prefix_.push_back(q);
        take(num, den);
        prefix_.resize(prefix_.size() - 2);
      }
    }
  }

  Rational x_;
  unsigned n_;
  NodeCounter counter_;
  Rational deficit_;  // x minus the incumbent value
  long double deficit_approx_ = 0;
  std::uint64_t version_ = 0;
  std::vector<Integer> best_;
  std::vector<Integer> prefix_;
};

class RepresentationSearch {
 public:
  RepresentationSearch(const std::optional<Integer>& max_denom, const SearchLimits& limits)
      : max_denom_(max_denom), counter_(limits, "has_representation") {}

  bool find(const Rational& rest, unsigned terms, const Integer& lo) {
    counter_.tick();
    if (terms == 1) {
      if (rest.num() != 1) return false;
      const Integer& m = rest.den();
      if (m < lo || (max_denom_ && m > *max_denom_)) return false;
      prefix_.push_back(m);
      return true;
    }
    // The next term must leave something positive for the others.
    for (Integer m = max_integer(lo, greedy_next_denominator(rest));; ++m) {
      counter_.tick();
      if (max_denom_ && m + (terms - 1) > *max_denom_) break;
      if (consecutive_tail(m, terms) < rest) break;
      prefix_.push_back(m);
      if (find(rest - Rational::unit(m), terms - 1, m + 1)) return true;
      prefix_.pop_back();
    }
    return false;
  }

  std::vector<Integer> take() { return std::move(prefix_); }

 private:
  std::optional<Integer> max_denom_;
  NodeCounter counter_;
  std::vector<Integer> prefix_;
};

// Minimises s > q over sums with at most n terms. Prefixes stay strictly
// below q; a prefix equal to q would mean q has a shorter representation.
// The gap q - partial is carried as an unreduced pair u/v and the incumbent
// as its excess over q.
class NextPointSearch {
 public:
  NextPointSearch(const Rational& q, unsigned n, const SearchLimits& limits)
      : q_(q), n_(n), counter_(limits, "next_point_above") {}

  // No sum lies in (q, floor): reaching floor ends the search.
  void set_floor(const Rational& floor) { floor_excess_ = floor - q_; }

  std::optional<Rational> run() {
    descend(q_.num(), q_.den(), Integer(0), n_);
    if (!found_) return std::nullopt;
    return q_ + excess_;
  }

 private:
  enum class Hint { below, above, unsure };

  Hint classify(long double est) const {
    if (!found_) return Hint::below;
    if (est > excess_approx_ * (1.0L + 1e-9L)) return Hint::above;
    if (est < excess_approx_ * (1.0L - 1e-9L)) return Hint::below;
    return Hint::unsure;
  }

  bool exact_below(const Integer& num, const Integer& den) const {
    return !found_ || num * excess_.den() < excess_.num() * den;
  }

  void offer(const Integer& num, const Integer& den) {
    const Hint hint = classify(approx(num) / approx(den));
    if (hint == Hint::above) return;
    if (hint == Hint::unsure && !exact_below(num, den)) return;
    excess_ = Rational(num, den);
    excess_approx_ = approx(excess_);
    found_ = true;
    if (floor_excess_ && excess_ <= *floor_excess_) done_ = true;
  }

  // Every completion below m is at most r/m and at least r/(m+r-1).
  bool can_exceed(const Integer& u, const Integer& v, const Integer& m, unsigned r) const {
    if (u * m >= v * r) return false;
    if (u * (m + (r - 1)) < v * r) return true;
    return consecutive_tail(m, r) > Rational(u, v);
  }

  void descend(const Integer& u, const Integer& v, const Integer& last, unsigned r) {
    counter_.tick();
    // One more term: the largest unit fraction above the gap.
    const Integer top = (v - 1) / u;
    if (top > last) offer(v - u * top, v * top);
    if (r == 1) return;
    Integer lo = v / u + 1;
    if (lo <= last) lo = last + 1;
    if (r == 2) {
      pairs(u, v, lo);
      return;
    }
    Integer um = u * lo - v;
    Integer vm = v * lo;
    Integer rem;
    for (Integer m = lo; !done_; ++m, um += u, vm += v) {
      if (!can_exceed(u, v, m, r)) break;
      if (r == 3 && found_ && hopeless_child(um, vm, m, rem)) {
        counter_.tick();
        continue;
      }
      descend(um, vm, m, r - 1);
    }
  }

  // A child with gap um/vm and two terms left either stops with one term or
  // takes a pair, whose excess is above A/(v a)^2 and rises with a.
  bool hopeless_child(const Integer& um, const Integer& vm, const Integer& m, Integer& rem) {
    const long double need = excess_approx_ * (1.0L + 1e-6L);
    const long double u_ld = approx(um);
    const long double v_ld = approx(vm);
    mpz_tdiv_r(rem.get_mpz_t(), vm.get_mpz_t(), um.get_mpz_t());
    const long double a_floor = v_ld / u_ld;  // approximately vm/um
    long double a0 = std::floor(a_floor) + 1;
    long double A0 = u_ld - approx(rem);
    const long double m_ld = approx(m);
    if (a0 <= m_ld) {
      a0 = m_ld + 1;
      A0 = u_ld * a0 - v_ld;
    }
    if (!(A0 > 0) || a0 > 1e15L) return false;
    const long double va0 = v_ld * a0;
    if (A0 / (va0 * va0) < need) return false;
    // Single term 1/top with top = ceil(vm/um) - 1.
    const long double top = rem == 0 ? a_floor - 1 : std::floor(a_floor);
    if (top > m_ld && (v_ld - u_ld * top) / (v_ld * top) < need) return false;
    return true;
  }

  // Pairs 1/a + 1/b above the gap u/v with a >= lo; for each a the best b is
  // the largest one that still overshoots.
  void pairs(const Integer& u, const Integer& v, const Integer& lo) {
    Integer a = lo;
    Integer A = u * a - v;  // gap after 1/a is A/(v a)
    Integer va = v * a;
    Integer b, rem, num, den;
    for (; !done_; ++a, A += u, va += v) {
      counter_.tick();
      // Excess > A/(va)^2, increasing in a while b > a is possible.
      const long double va_ld = approx(va);
      Hint hint = classify(approx(A) / (va_ld * va_ld));
      if (hint == Hint::unsure) hint = exact_below(A, va * va) ? Hint::below : Hint::above;
      if (hint == Hint::above) return;
      mpz_tdiv_qr(b.get_mpz_t(), rem.get_mpz_t(), va.get_mpz_t(), A.get_mpz_t());
      if (rem == 0) {
        b -= 1;
        num = A;
      } else {
        num = rem;
      }
      if (b <= a) return;
      mpz_mul(den.get_mpz_t(), va.get_mpz_t(), b.get_mpz_t());
      offer(num, den);
    }
  }

  Rational q_;
  unsigned n_;
  NodeCounter counter_;
  bool found_ = false;
  bool done_ = false;
  std::optional<Rational> floor_excess_;
  Rational excess_;
  long double excess_approx_ = 0;
};

}  // namespace

BestUnderapprox best_underapprox(const Rational& x, unsigned n,
                                 const SearchLimits& limits) {
  if (x.sign() <= 0) throw InvalidArgument("best_underapprox: x must be positive");
  if (n == 0) return {Rational(0), EgyptianRep()};
  const Rational h = harmonic(n);
  if (x > h) {
    std::vector<Integer> ms;
    for (unsigned k = 1; k <= n; ++k) ms.emplace_back(k);
    return {h, EgyptianRep(std::move(ms))};
  }
  return BestSearch(x, n, limits).run();
}

std::optional<EgyptianRep> has_representation(const Rational& q, unsigned j,
                                              const std::optional<Integer>& max_denom,
                                              const SearchLimits& limits) {
  if (q.sign() <= 0) throw InvalidArgument("has_representation: q must be positive");
  if (j == 0) throw InvalidArgument("has_representation: j must be positive");
  RepresentationSearch search(max_denom, limits);
  if (!search.find(q, j, Integer(1))) return std::nullopt;
  return EgyptianRep(search.take());
}

Rational next_point_above_unchecked(const Rational& q, unsigned n,
                                    const SearchLimits& limits) {
  if (q.sign() <= 0) {
    throw InvalidArgument("next_point_above: q must be positive (sums accumulate at 0)");
  }
  if (n == 0) throw InvalidArgument("next_point_above: n must be positive");
  if (q >= harmonic(n)) {
    throw InvalidArgument("next_point_above: no " + std::to_string(n) +
                          "-term sum lies above " + q.str());
  }
  auto r = NextPointSearch(q, n, limits).run();
  // Unreachable for q < H_n: 1 + 1/2 + ... + 1/n is always a candidate.
  if (!r) throw std::logic_error("next_point_above: empty search");
  return *r;
}

Rational cell_upper(const Rational& q, const Rational& x, unsigned n, const SearchLimits& limits) {
  if (!(q < x)) throw InvalidArgument("cell_upper: need q < x");
  if (x > harmonic(n)) throw InvalidArgument("cell_upper: x above H_n");
  NextPointSearch search(q, n, limits);
  search.set_floor(x);
  auto r = search.run();
  if (!r) throw std::logic_error("cell_upper: empty search");
  return *r;
}

Rational next_point_above(const Rational& q, unsigned n, const SearchLimits& limits) {
  if (q.sign() <= 0) {
    throw InvalidArgument("next_point_above: q must be positive (sums accumulate at 0)");
  }
  if (n == 0) throw InvalidArgument("next_point_above: n must be positive");
  if (!has_representation(q, n, std::nullopt, limits)) {
    throw PreconditionViolation(
        "next_point_above: " + q.str() + " is not an " + std::to_string(n) + "-term sum",
        std::nullopt);
  }
  for (unsigned j = 1; j < n; ++j) {
    if (auto shorter = has_representation(q, j, std::nullopt, limits)) {
      throw PreconditionViolation("next_point_above: " + q.str() + " is also a " +
                                      std::to_string(j) + "-term sum [" + shorter->str() +
                                      "], so it is never a best " + std::to_string(n) +
                                      "-term value",
                                  shorter);
    }
  }
  return next_point_above_unchecked(q, n, limits);
}

}  // namespace egyptian
