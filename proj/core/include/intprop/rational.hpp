// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "intprop/bigint.hpp"
#include "intprop/interval.hpp"

namespace intprop {

// Exact rational with positive denominator and coprime components.
using Rational = mpq_class;

// Extended rational bound: -oo, finite rational, or +oo.
class RatBound {
 public:
  RatBound() : inf_(0), value_(0) {}
  explicit RatBound(Rational v) : inf_(0), value_(std::move(v)) {
    value_.canonicalize();
  }
  static RatBound neg_inf() { return RatBound(-1); }
  static RatBound pos_inf() { return RatBound(+1); }

  bool is_finite() const { return inf_ == 0; }
  bool is_neg_inf() const { return inf_ < 0; }
  bool is_pos_inf() const { return inf_ > 0; }
  const Rational& value() const {
    assert(is_finite());
    return value_;
  }

  friend bool operator<(const RatBound& a, const RatBound& b) {
    if (a.inf_ != b.inf_) return a.inf_ < b.inf_;
    return a.inf_ == 0 && a.value_ < b.value_;
  }
  friend bool operator==(const RatBound& a, const RatBound& b) {
    return a.inf_ == b.inf_ && (a.inf_ != 0 || a.value_ == b.value_);
  }
  friend bool operator<=(const RatBound& a, const RatBound& b) {
    return !(b < a);
  }

  friend RatBound operator+(const RatBound& a, const RatBound& b) {
    if (!a.is_finite()) {
      assert(b.is_finite() || a.inf_ == b.inf_);
      return a;
    }
    if (!b.is_finite()) return b;
    return RatBound(Rational(a.value_ + b.value_));
  }

  static RatBound min(const RatBound& a, const RatBound& b) {
    return a < b ? a : b;
  }
  static RatBound max(const RatBound& a, const RatBound& b) {
    return a < b ? b : a;
  }

  int sign() const {
    if (inf_ != 0) return inf_;
    return mpq_sgn(value_.get_mpq_t());
  }

  std::string str() const;

 private:
  explicit RatBound(int inf) : inf_(inf), value_(0) {}
  int8_t inf_;
  Rational value_;
};

// Real interval with exact rational bounds, plus an empty state. Used only
// by the fraction-simplified reduction rules.
class RatInterval {
 public:
  RatInterval() : empty_(true) {}

  static RatInterval empty() { return RatInterval(); }
  static RatInterval all() {
    return RatInterval(RatBound::neg_inf(), RatBound::pos_inf());
  }
  static RatInterval point(Rational v) {
    RatBound b(std::move(v));
    return RatInterval(b, b);
  }
  static RatInterval of(Rational lo, Rational hi) {
    return RatInterval(RatBound(std::move(lo)), RatBound(std::move(hi)));
  }
  // Exact embedding of an integer interval.
  static RatInterval from_int(const IntInterval& iv);

  RatInterval(RatBound lo, RatBound hi)
      : empty_(false), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) empty_ = true;
  }

  bool is_empty() const { return empty_; }
  const RatBound& lo() const {
    assert(!empty_);
    return lo_;
  }
  const RatBound& hi() const {
    assert(!empty_);
    return hi_;
  }
  bool contains_zero() const {
    return !empty_ && lo_.sign() <= 0 && hi_.sign() >= 0;
  }
  bool contains(const Rational& v) const {
    if (empty_) return false;
    RatBound b{v};
    return lo_ <= b && b <= hi_;
  }

  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  std::string str() const;

 private:
  bool empty_;
  RatBound lo_, hi_;
};

// Endpoint-exact rational interval addition; counted under sum_q.
RatInterval rat_add(const RatInterval& x, const RatInterval& y,
                    OpCounters& ops);

// Smallest real interval containing {u | exists x in X, y in Y with u*y = x}
// under real set division; counted under div_q. When the quotient set is a
// pair of rays the hull (-oo..+oo) is returned.
RatInterval rat_div(const RatInterval& x, const RatInterval& y,
                    OpCounters& ops);

// Largest integer interval contained in X: [ceil(lo)..floor(hi)].
IntInterval rat_to_int_inward(const RatInterval& x);

}  // namespace intprop
