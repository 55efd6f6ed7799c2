// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "intprop/bigint.hpp"

namespace intprop {

// Extended integer bound: -oo, a finite value, or +oo.
class Bound {
 public:
  Bound() : inf_(0), value_(0) {}
  explicit Bound(BigInt v) : inf_(0), value_(std::move(v)) {}
  explicit Bound(long v) : inf_(0), value_(v) {}

  static Bound neg_inf() { return Bound(-1, 0); }
  static Bound pos_inf() { return Bound(+1, 0); }

  bool is_finite() const { return inf_ == 0; }
  bool is_neg_inf() const { return inf_ < 0; }
  bool is_pos_inf() const { return inf_ > 0; }

  const BigInt& value() const {
    assert(is_finite());
    return value_;
  }

  // Total order with -oo < any finite < +oo.
  friend bool operator<(const Bound& a, const Bound& b) {
    if (a.inf_ != b.inf_) return a.inf_ < b.inf_;
    return a.inf_ == 0 && a.value_ < b.value_;
  }
  friend bool operator==(const Bound& a, const Bound& b) {
    return a.inf_ == b.inf_ && (a.inf_ != 0 || a.value_ == b.value_);
  }
  friend bool operator<=(const Bound& a, const Bound& b) { return !(b < a); }
  friend bool operator>(const Bound& a, const Bound& b) { return b < a; }
  friend bool operator>=(const Bound& a, const Bound& b) { return !(a < b); }
  friend bool operator!=(const Bound& a, const Bound& b) { return !(a == b); }

  Bound operator-() const {
    if (inf_ != 0) return Bound(-inf_, 0);
    return Bound(BigInt(-value_));
  }

  // Sum of bounds; -oo + +oo is not meaningful and asserts.
  friend Bound operator+(const Bound& a, const Bound& b) {
    if (a.inf_ != 0) {
      assert(b.inf_ == 0 || b.inf_ == a.inf_);
      return a;
    }
    if (b.inf_ != 0) return b;
    return Bound(BigInt(a.value_ + b.value_));
  }
  friend Bound operator-(const Bound& a, const Bound& b) { return a + (-b); }

  // Product with the 0 * oo = 0 convention used for hull computations.
  friend Bound operator*(const Bound& a, const Bound& b) {
    int sa = a.sign(), sb = b.sign();
    if (a.inf_ != 0 || b.inf_ != 0) {
      if (sa == 0 || sb == 0) return Bound(BigInt(0));
      return Bound(sa * sb, 0);
    }
    return Bound(BigInt(a.value_ * b.value_));
  }

  int sign() const {
    if (inf_ != 0) return inf_;
    return mpz_sgn(value_.get_mpz_t());
  }

  static Bound min(const Bound& a, const Bound& b) { return a < b ? a : b; }
  static Bound max(const Bound& a, const Bound& b) { return a < b ? b : a; }

  std::string str() const;

 private:
  Bound(int inf, long v) : inf_(inf), value_(v) {}
  int8_t inf_;    // -1: -oo, 0: finite, +1: +oo
  BigInt value_;  // meaningful only when inf_ == 0
};

// Integer interval [lo..hi] with possibly infinite bounds, plus a
// distinguished empty state. lo = -oo, hi = +oo is the whole of Z.
class IntInterval {
 public:
  IntInterval() : empty_(true) {}

  static IntInterval empty() { return IntInterval(); }
  static IntInterval all() {
    return IntInterval(Bound::neg_inf(), Bound::pos_inf());
  }
  // [a..b]; a > b yields the empty interval.
  static IntInterval finite(BigInt a, BigInt b) {
    return IntInterval(Bound(std::move(a)), Bound(std::move(b)));
  }
  static IntInterval finite(long a, long b) {
    return IntInterval(Bound(BigInt(a)), Bound(BigInt(b)));
  }
  static IntInterval singleton(BigInt v) {
    Bound b(std::move(v));
    return IntInterval(b, b);
  }
  static IntInterval singleton(long v) { return singleton(BigInt(v)); }
  static IntInterval at_most(BigInt b) {  // (-oo..b]
    return IntInterval(Bound::neg_inf(), Bound(std::move(b)));
  }
  static IntInterval at_least(BigInt a) {  // [a..+oo)
    return IntInterval(Bound(std::move(a)), Bound::pos_inf());
  }

  IntInterval(Bound lo, Bound hi) : empty_(false), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) {
      empty_ = true;
    } else {
      assert(!lo_.is_pos_inf() && !hi_.is_neg_inf());
    }
  }

  bool is_empty() const { return empty_; }
  bool is_all() const {
    return !empty_ && lo_.is_neg_inf() && hi_.is_pos_inf();
  }
  bool is_finite() const {
    return !empty_ && lo_.is_finite() && hi_.is_finite();
  }
  bool is_singleton() const { return is_finite() && lo_ == hi_; }

  const Bound& lo() const {
    assert(!empty_);
    return lo_;
  }
  const Bound& hi() const {
    assert(!empty_);
    return hi_;
  }

  bool contains(const BigInt& v) const {
    if (empty_) return false;
    Bound b{v};
    return lo_ <= b && b <= hi_;
  }
  bool contains_zero() const { return contains(BigInt(0)); }

  // Number of members of a finite interval.
  BigInt size() const {
    assert(is_finite());
    return hi_.value() - lo_.value() + 1;
  }

  bool subset_of(const IntInterval& other) const {
    if (empty_) return true;
    if (other.empty_) return false;
    return other.lo_ <= lo_ && hi_ <= other.hi_;
  }

  friend bool operator==(const IntInterval& a, const IntInterval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const IntInterval& a, const IntInterval& b) {
    return !(a == b);
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const IntInterval& iv) {
    return os << iv.str();
  }

 private:
  bool empty_;
  Bound lo_, hi_;
};

// Zero, one, or two pairwise disjoint, non-adjacent, ascending intervals.
// Root extraction for even n is the only producer of two parts.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(const IntInterval& a) { push(a); }
  IntervalUnion(const IntInterval& a, const IntInterval& b) {
    push(a);
    push(b);
  }
  explicit IntervalUnion(const std::vector<IntInterval>& ivs) {
    for (const auto& iv : ivs) push(iv);
  }

  const std::vector<IntInterval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }

  bool contains(const BigInt& v) const {
    for (const auto& p : parts_)
      if (p.contains(v)) return true;
    return false;
  }

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.parts_ == b.parts_;
  }

  std::string str() const;

 private:
  void push(const IntInterval& iv);
  std::vector<IntInterval> parts_;
};

// ^{<=}S or ^{>=}S of a non-empty interval origin: all integers below
// (resp. above) some element of the origin.
struct HalfLine {
  enum class Kind { AtMost, AtLeast };
  Kind kind;
  IntInterval origin;

  static HalfLine at_most(IntInterval s) {
    return HalfLine{Kind::AtMost, std::move(s)};
  }
  static HalfLine at_least(IntInterval s) {
    return HalfLine{Kind::AtLeast, std::move(s)};
  }
};

// Interval-operation counters, one per operation class of the stats report.
// The Q-suffixed counters cover the rational-interval variants.
struct OpCounters {
  unsigned long root = 0;
  unsigned long exp = 0;
  unsigned long div = 0;
  unsigned long mult_i = 0;  // interval * interval
  unsigned long mult_f = 0;  // interval * integer factor
  unsigned long sum = 0;
  unsigned long div_q = 0;
  unsigned long sum_q = 0;

  void reset() { *this = OpCounters{}; }
  unsigned long total() const {
    return root + exp + div + mult_i + mult_f + sum + div_q + sum_q;
  }
  OpCounters& operator+=(const OpCounters& o) {
    root += o.root;
    exp += o.exp;
    div += o.div;
    mult_i += o.mult_i;
    mult_f += o.mult_f;
    sum += o.sum;
    div_q += o.div_q;
    sum_q += o.sum_q;
    return *this;
  }
};

// --- interval operations ---------------------------------------------------
// Set operations of the integer set arithmetic restricted to intervals,
// with int(.) hull closure where the exact result need not be an interval.
// Each counted operation increments exactly one OpCounters field; the
// uncounted ones (intersection, hulls) increment none.

IntInterval intersect(const IntInterval& x, const IntInterval& y);

IntInterval add(const IntInterval& x, const IntInterval& y, OpCounters& ops);
IntInterval sub(const IntInterval& x, const IntInterval& y, OpCounters& ops);

// int(X * Y) by endpoint analysis.
IntInterval mul_hull(const IntInterval& x, const IntInterval& y,
                     OpCounters& ops);

// int(a * X). Multiplication by an integer factor is a distinct operation
// from interval multiplication and is counted separately.
IntInterval scale(const IntInterval& x, const BigInt& a, OpCounters& ops);

// int(X / Y) under the set division X/Y = {u | exists x in X, y in Y with
// u*y = x}. Total; division by [-1..-1] is rewritten to scale(X, -1) and
// counted under mult_f. Case 5 refines the divisor bounds to actual divisors
// of an element of X before taking quotient extremes.
IntInterval div_hull(const IntInterval& x, const IntInterval& y,
                     OpCounters& ops);

// int((half-line)/Y): the >=Q /\ <=Q stipulation for inequality rules.
IntInterval div_halfline(const HalfLine& n, const IntInterval& y,
                         OpCounters& ops);

// int(X^n), n >= 1.
IntInterval pow_hull(const IntInterval& x, unsigned long n, OpCounters& ops);

// Exact n-th root set {v | v^n in X}; one interval for odd n, up to two for
// even n. int(.) is deliberately not applied to the result.
IntervalUnion root(const IntInterval& x, unsigned long n, OpCounters& ops);

// Smallest enclosing interval of a union.
IntInterval hull_of_union(const IntervalUnion& u);

// Piecewise X /\ U, and its hull int(X /\ U).
IntervalUnion intersect_union(const IntInterval& x, const IntervalUnion& u);
IntInterval intersect_union_hull(const IntInterval& x, const IntervalUnion& u);

}  // namespace intprop
