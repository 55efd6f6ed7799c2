// SPDX-License-Identifier: Apache-2.0
#include "intprop/interval.hpp"

#include <algorithm>
#include <optional>

namespace intprop {

namespace {

// Truncated integer n-th root of a non-negative value, corrected by exact
// powering so that r^n <= a < (r+1)^n.
BigInt trunc_root_nonneg(const BigInt& a, unsigned long n) {
  assert(a >= 0);
  BigInt r;
  mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  while (pow_exact(r, n) > a) --r;
  while (pow_exact(r + 1, n) <= a) ++r;
  return r;
}

}  // namespace

BigInt floor_root(const BigInt& a, unsigned long n) {
  if (a >= 0) return trunc_root_nonneg(a, n);
  assert(n % 2 == 1);
  BigInt m = abs_big(a);
  BigInt r = trunc_root_nonneg(m, n);
  // floor(-m^(1/n)) = -r when r^n = m, else -(r+1)
  return pow_exact(r, n) == m ? BigInt(-r) : BigInt(-r - 1);
}

BigInt ceil_root(const BigInt& a, unsigned long n) {
  if (a < 0) {
    assert(n % 2 == 1);
    return -trunc_root_nonneg(abs_big(a), n);
  }
  BigInt r = trunc_root_nonneg(a, n);
  return pow_exact(r, n) == a ? r : BigInt(r + 1);
}

std::string Bound::str() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  return value_.get_str();
}

std::string IntInterval::str() const {
  if (empty_) return "empty";
  if (is_all()) return "Z";
  std::string lo = lo_.is_neg_inf() ? "(-inf" : "[" + lo_.value().get_str();
  std::string hi = hi_.is_pos_inf() ? "+inf)" : hi_.value().get_str() + "]";
  return lo + ".." + hi;
}

void IntervalUnion::push(const IntInterval& iv) {
  if (iv.is_empty()) return;
  parts_.push_back(iv);
  std::sort(parts_.begin(), parts_.end(),
            [](const IntInterval& a, const IntInterval& b) {
              return a.lo() < b.lo();
            });
  // merge overlapping or adjacent parts
  std::vector<IntInterval> merged;
  for (const auto& p : parts_) {
    if (!merged.empty()) {
      const IntInterval& last = merged.back();
      bool joins = false;
      if (p.lo() <= last.hi()) {
        joins = true;
      } else if (last.hi().is_finite() && p.lo().is_finite() &&
                 p.lo().value() == last.hi().value() + 1) {
        joins = true;
      }
      if (joins) {
        merged.back() =
            IntInterval(last.lo(), Bound::max(last.hi(), p.hi()));
        continue;
      }
    }
    merged.push_back(p);
  }
  parts_ = std::move(merged);
}

std::string IntervalUnion::str() const {
  if (parts_.empty()) return "empty";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += " u ";
    s += parts_[i].str();
  }
  return s;
}

IntInterval intersect(const IntInterval& x, const IntInterval& y) {
  if (x.is_empty() || y.is_empty()) return IntInterval::empty();
  return IntInterval(Bound::max(x.lo(), y.lo()), Bound::min(x.hi(), y.hi()));
}

IntInterval add(const IntInterval& x, const IntInterval& y, OpCounters& ops) {
  ++ops.sum;
  if (x.is_empty() || y.is_empty()) return IntInterval::empty();
  return IntInterval(x.lo() + y.lo(), x.hi() + y.hi());
}

IntInterval sub(const IntInterval& x, const IntInterval& y, OpCounters& ops) {
  ++ops.sum;
  if (x.is_empty() || y.is_empty()) return IntInterval::empty();
  return IntInterval(x.lo() - y.hi(), x.hi() - y.lo());
}

IntInterval mul_hull(const IntInterval& x, const IntInterval& y,
                     OpCounters& ops) {
  ++ops.mult_i;
  if (x.is_empty() || y.is_empty()) return IntInterval::empty();
  Bound c1 = x.lo() * y.lo();
  Bound c2 = x.lo() * y.hi();
  Bound c3 = x.hi() * y.lo();
  Bound c4 = x.hi() * y.hi();
  Bound lo = Bound::min(Bound::min(c1, c2), Bound::min(c3, c4));
  Bound hi = Bound::max(Bound::max(c1, c2), Bound::max(c3, c4));
  return IntInterval(lo, hi);
}

IntInterval scale(const IntInterval& x, const BigInt& a, OpCounters& ops) {
  ++ops.mult_f;
  if (x.is_empty()) return IntInterval::empty();
  if (a == 0) return IntInterval::singleton(0);
  Bound f{a};
  Bound lo = x.lo() * f;
  Bound hi = x.hi() * f;
  if (a < 0) std::swap(lo, hi);
  return IntInterval(lo, hi);
}

namespace {

// Extended rational used for quotient extremes of the division hull.
struct ExtQ {
  int inf = 0;  // -1, 0, +1
  mpq_class v;
  bool indeterminate = false;
};

ExtQ quot(const Bound& num, const Bound& den) {
  ExtQ q;
  if (!num.is_finite() && !den.is_finite()) {
    q.indeterminate = true;
    return q;
  }
  if (!num.is_finite()) {
    q.inf = num.sign() * den.sign();
    return q;
  }
  if (!den.is_finite()) {
    q.v = 0;  // finite / oo -> limit 0
    return q;
  }
  q.v = mpq_class(num.value()) / mpq_class(den.value());
  return q;
}

bool ext_less(const ExtQ& a, const ExtQ& b) {
  if (a.inf != b.inf) return a.inf < b.inf;
  return a.inf == 0 && a.v < b.v;
}

Bound ceil_bound(const ExtQ& q) {
  if (q.inf < 0) return Bound::neg_inf();
  if (q.inf > 0) return Bound::pos_inf();
  return Bound(ceil_div(q.v.get_num(), q.v.get_den()));
}

Bound floor_bound(const ExtQ& q) {
  if (q.inf < 0) return Bound::neg_inf();
  if (q.inf > 0) return Bound::pos_inf();
  return Bound(floor_div(q.v.get_num(), q.v.get_den()));
}

// Divisor test: some multiple of m >= 1 lies in [alpha..beta], 1 <= alpha.
bool has_multiple(const BigInt& m, const BigInt& alpha, const BigInt& beta) {
  return floor_div(beta, m) * m >= alpha;
}

// Least m in [lo..hi] whose multiples meet [alpha..beta]. Descends through
// quotient blocks so runs of failing candidates are skipped in one step.
std::optional<BigInt> least_divisor(const BigInt& alpha, const BigInt& beta,
                                    const BigInt& lo, const BigInt& hi) {
  BigInt m = lo;
  while (m <= hi) {
    BigInt q = floor_div(beta, m);
    if (q == 0) return std::nullopt;  // m > beta, as are all larger m
    if (m * q >= alpha) return m;
    BigInt block_end = floor_div(beta, q);
    BigInt next = ceil_div(alpha, q);
    if (next > block_end) next = block_end + 1;
    if (next <= m) next = m + 1;
    m = next;
  }
  return std::nullopt;
}

// Greatest m in [lo..hi] whose multiples meet [alpha..beta].
std::optional<BigInt> greatest_divisor(const BigInt& alpha, const BigInt& beta,
                                       const BigInt& lo, const BigInt& hi) {
  BigInt m = hi;
  while (m >= lo) {
    BigInt q = floor_div(beta, m);
    if (q == 0) {
      m = beta;  // candidates above beta never pass
      continue;
    }
    if (m * q >= alpha) return m;
    BigInt next = floor_div(beta, q + 1);
    if (next >= m) next = m - 1;
    m = next;
  }
  return std::nullopt;
}

}  // namespace

IntInterval div_hull(const IntInterval& x, const IntInterval& y,
                     OpCounters& ops) {
  // Division by the constant interval [-1..-1] is implemented as
  // multiplication by a constant (and counted as such).
  if (!y.is_empty() && y.is_singleton() && y.lo().value() == -1)
    return scale(x, BigInt(-1), ops);
  ++ops.div;
  if (x.is_empty() || y.is_empty()) return IntInterval::empty();

  const bool zx = x.contains_zero();
  const bool zy = y.contains_zero();

  // Case 1: 0 in X and 0 in Y.
  if (zx && zy) return IntInterval::all();
  // Case 2: 0 not in X and Y = [0..0].
  if (!zx && y.is_singleton() && y.lo().value() == 0)
    return IntInterval::empty();
  // Case 3: 0 not in X, c < 0 < d.
  if (!zx && zy && y.lo().sign() < 0 && y.hi().sign() > 0) {
    if (!x.is_finite()) return IntInterval::all();
    BigInt e = std::max(abs_big(x.lo().value()), abs_big(x.hi().value()));
    return IntInterval::finite(-e, e);
  }
  // Case 4: exactly one bound of Y is 0; drop it.
  IntInterval yy = y;
  if (zy) {
    if (yy.lo().sign() == 0)
      yy = IntInterval(Bound(BigInt(1)), yy.hi());
    else
      yy = IntInterval(yy.lo(), Bound(BigInt(-1)));
  }

  // Case 5: 0 not in Y. Refine the divisor bounds to actual divisors of an
  // element of X; with 0 in X or X unbounded every candidate qualifies.
  Bound dc = yy.lo(), dd = yy.hi();
  if (!zx && x.is_finite()) {
    BigInt alpha, beta;  // canonical positive window of |X| members
    if (x.lo().sign() > 0) {
      alpha = x.lo().value();
      beta = x.hi().value();
    } else {
      alpha = -x.hi().value();
      beta = -x.lo().value();
    }
    const bool ypos = yy.lo().sign() > 0;
    // candidate magnitudes, clamped to beta (nothing above max|X| divides)
    BigInt mlo = ypos ? (yy.lo().is_finite() ? yy.lo().value() : BigInt(1))
                      : (yy.hi().is_finite() ? BigInt(-yy.hi().value())
                                             : BigInt(1));
    BigInt mhi;
    if (ypos)
      mhi = yy.hi().is_finite() ? std::min(yy.hi().value(), beta) : beta;
    else
      mhi = yy.lo().is_finite() ? std::min(BigInt(-yy.lo().value()), beta)
                                : beta;
    if (mlo > mhi) return IntInterval::empty();
    auto small = least_divisor(alpha, beta, mlo, mhi);
    if (!small) return IntInterval::empty();
    auto big = greatest_divisor(alpha, beta, *small, mhi);
    assert(big);
    if (ypos) {
      dc = Bound(*small);
      dd = Bound(*big);
    } else {
      dc = Bound(BigInt(-*big));
      dd = Bound(BigInt(-*small));
    }
  }

  ExtQ qs[4] = {quot(x.lo(), dc), quot(x.lo(), dd), quot(x.hi(), dc),
                quot(x.hi(), dd)};
  ExtQ mn = qs[0], mx = qs[0];
  for (const ExtQ& q : qs) {
    if (q.indeterminate) return IntInterval::all();
    if (ext_less(q, mn)) mn = q;
    if (ext_less(mx, q)) mx = q;
  }
  return IntInterval(ceil_bound(mn), floor_bound(mx));
}

IntInterval div_halfline(const HalfLine& n, const IntInterval& y,
                         OpCounters& ops) {
  ++ops.div;
  if (n.origin.is_empty() || y.is_empty()) return IntInterval::empty();

  const bool at_most = n.kind == HalfLine::Kind::AtMost;
  const Bound& edge = at_most ? n.origin.hi() : n.origin.lo();
  if (!edge.is_finite()) return IntInterval::all();  // half-line covers Z
  const BigInt& h = edge.value();

  const IntInterval pos = intersect(y, IntInterval::at_least(BigInt(1)));
  const IntInterval neg = intersect(y, IntInterval::at_most(BigInt(-1)));
  const bool zero = y.contains_zero();

  // Zero divisor: u*0 = 0 lies in the half-line iff 0 does.
  if (zero && ((at_most && h >= 0) || (!at_most && h <= 0)))
    return IntInterval::all();

  std::optional<Bound> upper, lower;  // (-oo..U] and [L..+oo) rays
  if (at_most) {
    if (!pos.is_empty()) {
      // u <= floor(h/y) for some positive y; pick the most permissive y
      if (h >= 0) {
        upper = Bound(floor_div(h, pos.lo().value()));
      } else {
        upper = pos.hi().is_finite()
                    ? Bound(floor_div(h, pos.hi().value()))
                    : Bound(BigInt(-1));  // h/y -> 0- as y grows
      }
    }
    if (!neg.is_empty()) {
      // u >= ceil(h/y) for some negative y
      if (h >= 0) {
        lower = Bound(ceil_div(h, neg.hi().value()));
      } else {
        lower = neg.lo().is_finite() ? Bound(ceil_div(h, neg.lo().value()))
                                     : Bound(BigInt(1));
      }
    }
  } else {
    if (!pos.is_empty()) {
      // u >= ceil(h/y) for some positive y
      if (h <= 0) {
        lower = Bound(ceil_div(h, pos.lo().value()));
      } else {
        lower = pos.hi().is_finite() ? Bound(ceil_div(h, pos.hi().value()))
                                     : Bound(BigInt(1));
      }
    }
    if (!neg.is_empty()) {
      // u <= floor(h/y) for some negative y
      if (h <= 0) {
        upper = Bound(floor_div(h, neg.hi().value()));
      } else {
        upper = neg.lo().is_finite() ? Bound(floor_div(h, neg.lo().value()))
                                     : Bound(BigInt(-1));
      }
    }
  }

  if (upper && lower) return IntInterval::all();  // two rays, int(.) gives Z
  if (upper) return IntInterval(Bound::neg_inf(), *upper);
  if (lower) return IntInterval(*lower, Bound::pos_inf());
  return IntInterval::empty();
}

namespace {

Bound pow_bound(const Bound& b, unsigned long n) {
  if (b.is_finite()) return Bound(pow_exact(b.value(), n));
  if (n % 2 == 1) return b;
  return Bound::pos_inf();  // even power of an infinite magnitude
}

}  // namespace

IntInterval pow_hull(const IntInterval& x, unsigned long n, OpCounters& ops) {
  assert(n >= 1);
  ++ops.exp;
  if (x.is_empty()) return IntInterval::empty();
  if (n == 1) return x;
  if (n % 2 == 1)
    return IntInterval(pow_bound(x.lo(), n), pow_bound(x.hi(), n));
  if (x.lo().sign() >= 0)
    return IntInterval(pow_bound(x.lo(), n), pow_bound(x.hi(), n));
  if (x.hi().sign() <= 0)
    return IntInterval(pow_bound(x.hi(), n), pow_bound(x.lo(), n));
  // straddles zero
  Bound top = Bound::max(pow_bound(x.lo(), n), pow_bound(x.hi(), n));
  return IntInterval(Bound(BigInt(0)), top);
}

IntervalUnion root(const IntInterval& x, unsigned long n, OpCounters& ops) {
  assert(n >= 1);
  ++ops.root;
  if (x.is_empty()) return IntervalUnion();
  if (n == 1) return IntervalUnion(x);
  if (n % 2 == 1) {
    Bound lo = x.lo().is_finite() ? Bound(ceil_root(x.lo().value(), n))
                                  : Bound::neg_inf();
    Bound hi = x.hi().is_finite() ? Bound(floor_root(x.hi().value(), n))
                                  : Bound::pos_inf();
    return IntervalUnion(IntInterval(lo, hi));
  }
  // even n
  if (x.hi().is_finite() && x.hi().value() < 0) return IntervalUnion();
  BigInt a_plus =
      (x.lo().is_finite() && x.lo().value() > 0) ? x.lo().value() : BigInt(0);
  Bound r_lo = Bound(ceil_root(a_plus, n));
  Bound r_hi = x.hi().is_finite() ? Bound(floor_root(x.hi().value(), n))
                                  : Bound::pos_inf();
  IntInterval pos(r_lo, r_hi);
  IntInterval neg(-r_hi, -r_lo);
  return IntervalUnion(neg, pos);
}

IntInterval hull_of_union(const IntervalUnion& u) {
  if (u.is_empty()) return IntInterval::empty();
  return IntInterval(u.parts().front().lo(), u.parts().back().hi());
}

IntervalUnion intersect_union(const IntInterval& x, const IntervalUnion& u) {
  std::vector<IntInterval> pieces;
  for (const auto& p : u.parts()) {
    IntInterval piece = intersect(x, p);
    if (!piece.is_empty()) pieces.push_back(piece);
  }
  return IntervalUnion(pieces);
}

IntInterval intersect_union_hull(const IntInterval& x,
                                 const IntervalUnion& u) {
  Bound lo, hi;
  bool any = false;
  for (const auto& p : u.parts()) {
    IntInterval piece = intersect(x, p);
    if (piece.is_empty()) continue;
    if (!any) {
      lo = piece.lo();
      hi = piece.hi();
      any = true;
    } else {
      lo = Bound::min(lo, piece.lo());
      hi = Bound::max(hi, piece.hi());
    }
  }
  return any ? IntInterval(lo, hi) : IntInterval::empty();
}

}  // namespace intprop
