// SPDX-License-Identifier: Apache-2.0
#include "intprop/rational.hpp"

namespace intprop {

std::string RatBound::str() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  return value_.get_str();
}

std::string RatInterval::str() const {
  if (empty_) return "empty";
  return "[" + lo_.str() + ".." + hi_.str() + "]";
}

RatInterval RatInterval::from_int(const IntInterval& iv) {
  if (iv.is_empty()) return RatInterval::empty();
  RatBound lo = iv.lo().is_finite() ? RatBound(Rational(iv.lo().value()))
                                    : RatBound::neg_inf();
  RatBound hi = iv.hi().is_finite() ? RatBound(Rational(iv.hi().value()))
                                    : RatBound::pos_inf();
  return RatInterval(lo, hi);
}

RatInterval rat_add(const RatInterval& x, const RatInterval& y,
                    OpCounters& ops) {
  ++ops.sum_q;
  if (x.is_empty() || y.is_empty()) return RatInterval::empty();
  return RatInterval(x.lo() + y.lo(), x.hi() + y.hi());
}

namespace {

// Quotient of extended rational bounds; denominator is never zero here.
// finite/oo tends to 0, oo/oo has no determinate sign.
struct QResult {
  RatBound b;
  bool indeterminate = false;
};

QResult rquot(const RatBound& num, const RatBound& den) {
  if (!num.is_finite() && !den.is_finite()) return {RatBound(), true};
  if (!num.is_finite()) {
    int s = num.sign() * den.sign();
    return {s > 0 ? RatBound::pos_inf() : RatBound::neg_inf(), false};
  }
  if (!den.is_finite()) return {RatBound(Rational(0)), false};
  return {RatBound(Rational(num.value() / den.value())), false};
}

}  // namespace

RatInterval rat_div(const RatInterval& x, const RatInterval& y,
                    OpCounters& ops) {
  ++ops.div_q;
  if (x.is_empty() || y.is_empty()) return RatInterval::empty();

  const bool zx = x.contains_zero();
  const bool zy = y.contains_zero();
  if (zx && zy) return RatInterval::all();
  const bool y_zero_point = y.lo().sign() == 0 && y.hi().sign() == 0;
  if (!zx && y_zero_point) return RatInterval::empty();
  if (!zx && zy && y.lo().sign() < 0 && y.hi().sign() > 0)
    return RatInterval::all();  // two rays hulled

  // Y touches zero at one endpoint: a single unbounded ray.
  if (!zx && zy) {
    const bool x_pos = x.lo().sign() > 0;
    if (y.hi().sign() > 0) {  // y in (0..d]
      auto q = rquot(x_pos ? x.lo() : x.hi(), y.hi());
      return x_pos ? RatInterval(q.b, RatBound::pos_inf())
                   : RatInterval(RatBound::neg_inf(), q.b);
    }
    // y in [c..0)
    auto q = rquot(x_pos ? x.lo() : x.hi(), y.lo());
    return x_pos ? RatInterval(RatBound::neg_inf(), q.b)
                 : RatInterval(q.b, RatBound::pos_inf());
  }

  // 0 not in Y: endpoint quotient extremes.
  QResult qs[4] = {rquot(x.lo(), y.lo()), rquot(x.lo(), y.hi()),
                   rquot(x.hi(), y.lo()), rquot(x.hi(), y.hi())};
  RatBound mn = qs[0].b, mx = qs[0].b;
  for (const auto& q : qs) {
    if (q.indeterminate) return RatInterval::all();
    mn = RatBound::min(mn, q.b);
    mx = RatBound::max(mx, q.b);
  }
  return RatInterval(mn, mx);
}

IntInterval rat_to_int_inward(const RatInterval& x) {
  if (x.is_empty()) return IntInterval::empty();
  Bound lo = x.lo().is_finite()
                 ? Bound(ceil_div(x.lo().value().get_num(),
                                  x.lo().value().get_den()))
                 : Bound::neg_inf();
  Bound hi = x.hi().is_finite()
                 ? Bound(floor_div(x.hi().value().get_num(),
                                   x.hi().value().get_den()))
                 : Bound::pos_inf();
  return IntInterval(lo, hi);
}

}  // namespace intprop
