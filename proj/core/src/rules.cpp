// SPDX-License-Identifier: Apache-2.0
#include "intprop/rules.hpp"

#include <algorithm>
#include <cassert>

namespace intprop {

const char* rule_kind_str(RuleKind k) {
  switch (k) {
    case RuleKind::LinearEq: return "linear-eq";
    case RuleKind::LinearIneq: return "linear-ineq";
    case RuleKind::PolyEq: return "poly-eq";
    case RuleKind::PolyIneq: return "poly-ineq";
    case RuleKind::PolyEqOpt: return "poly-eq-opt";
    case RuleKind::PolyIneqOpt: return "poly-ineq-opt";
    case RuleKind::Mult1: return "mult-1";
    case RuleKind::Mult2: return "mult-2";
    case RuleKind::Mult3: return "mult-3";
    case RuleKind::Exponentiation: return "exponentiation";
    case RuleKind::RootExtraction: return "root-extraction";
    case RuleKind::Diseq: return "diseq";
    case RuleKind::ObjBound: return "obj-bound";
  }
  return "?";
}

IntInterval eval_power_product(const DomainStore& store, const PowerProduct& pp,
                               OpCounters& ops) {
  assert(!pp.is_constant());
  IntInterval acc;
  bool first = true;
  for (const auto& [v, n] : pp.powers) {
    IntInterval f = n == 1 ? store[static_cast<size_t>(v)]
                           : pow_hull(store[static_cast<size_t>(v)], n, ops);
    acc = first ? f : mul_hull(acc, f, ops);
    first = false;
  }
  return acc;
}

IntInterval eval_monomial(const DomainStore& store, const Monomial& m,
                          OpCounters& ops) {
  if (m.pp.is_constant()) return IntInterval::singleton(m.coeff);
  return scale(eval_power_product(store, m.pp, ops), m.coeff, ops);
}

namespace {

// b - sum of all monomials except the skipped one.
IntInterval rhs_minus_others(const DomainStore& store, const PolyConstraint& c,
                             int skip, OpCounters& ops) {
  IntInterval acc;
  bool any = false;
  for (int i = 0; i < static_cast<int>(c.monomials.size()); ++i) {
    if (i == skip) continue;
    IntInterval t = eval_monomial(store, c.monomials[i], ops);
    acc = any ? add(acc, t, ops) : t;
    any = true;
  }
  if (!any) return IntInterval::singleton(c.rhs);
  return sub(IntInterval::singleton(c.rhs), acc, ops);
}

// N / s for a monomial divisor. Division by the constant 1 vanishes;
// by the constant -1 it becomes a sign flip counted as a factor
// multiplication.
IntInterval divide_by_monomial(const DomainStore& store, const IntInterval& n,
                               const Monomial& s, OpCounters& ops) {
  if (s.pp.is_constant()) {
    if (s.coeff == 1) return n;
    if (s.coeff == -1) return scale(n, BigInt(-1), ops);
    return div_hull(n, IntInterval::singleton(s.coeff), ops);
  }
  IntInterval sv = eval_monomial(store, s, ops);
  return div_hull(n, sv, ops);
}

IntInterval divide_halfline_by_monomial(const DomainStore& store,
                                        const HalfLine& h, const Monomial& s,
                                        OpCounters& ops) {
  if (s.pp.is_constant()) {
    if (s.coeff == 1) {
      if (h.origin.is_empty()) return IntInterval::empty();
      return h.kind == HalfLine::Kind::AtMost
                 ? IntInterval(Bound::neg_inf(), h.origin.hi())
                 : IntInterval(h.origin.lo(), Bound::pos_inf());
    }
    if (s.coeff == -1) {
      IntInterval m = scale(h.origin, BigInt(-1), ops);
      if (m.is_empty()) return IntInterval::empty();
      return h.kind == HalfLine::Kind::AtMost
                 ? IntInterval(m.lo(), Bound::pos_inf())
                 : IntInterval(Bound::neg_inf(), m.hi());
    }
    return div_halfline(h, IntInterval::singleton(s.coeff), ops);
  }
  IntInterval sv = eval_monomial(store, s, ops);
  return div_halfline(h, sv, ops);
}

// The selected monomial with the power at `position` removed.
Monomial strip_power(const Monomial& m, int position) {
  Monomial s{m.coeff, {}};
  for (int i = 0; i < static_cast<int>(m.pp.powers.size()); ++i)
    if (i != position) s.pp.powers.push_back(m.pp.powers[i]);
  return s;
}

int find_monomial_of(const PolyConstraint& c, VarId j) {
  for (int i = 0; i < static_cast<int>(c.monomials.size()); ++i)
    if (c.monomials[i].pp.contains(j)) return i;
  assert(false && "target variable not in constraint");
  return -1;
}

}  // namespace

IntInterval linear_equality_step(const DomainStore& store,
                                 const PolyConstraint& c, VarId j,
                                 OpCounters& ops) {
  assert(c.op == RelOp::Eq && c.is_linear());
  int l = find_monomial_of(c, j);
  IntInterval n = rhs_minus_others(store, c, l, ops);
  IntInterval d =
      divide_by_monomial(store, n, Monomial{c.monomials[l].coeff, {}}, ops);
  return intersect(store[static_cast<size_t>(j)], d);
}

IntInterval linear_inequality_step(const DomainStore& store,
                                   const PolyConstraint& c, VarId j,
                                   OpCounters& ops) {
  assert(c.op == RelOp::Le && c.is_linear());
  int l = find_monomial_of(c, j);
  IntInterval n = rhs_minus_others(store, c, l, ops);
  IntInterval d = divide_halfline_by_monomial(
      store, HalfLine::at_most(n), Monomial{c.monomials[l].coeff, {}}, ops);
  return intersect(store[static_cast<size_t>(j)], d);
}

IntInterval poly_equality_step(const DomainStore& store,
                               const PolyConstraint& c, int l, int p,
                               OpCounters& ops) {
  assert(c.op == RelOp::Eq);
  const Monomial& m = c.monomials[static_cast<size_t>(l)];
  const VarId j = m.pp.powers[static_cast<size_t>(p)].first;
  const unsigned long np = m.pp.powers[static_cast<size_t>(p)].second;
  IntInterval n = rhs_minus_others(store, c, l, ops);
  IntInterval d = divide_by_monomial(store, n, strip_power(m, p), ops);
  const IntInterval& dj = store[static_cast<size_t>(j)];
  if (np == 1) return intersect(dj, d);
  return intersect_union_hull(dj, root(d, np, ops));
}

IntInterval poly_inequality_step(const DomainStore& store,
                                 const PolyConstraint& c, int l, int p,
                                 OpCounters& ops) {
  assert(c.op == RelOp::Le);
  const Monomial& m = c.monomials[static_cast<size_t>(l)];
  const VarId j = m.pp.powers[static_cast<size_t>(p)].first;
  const unsigned long np = m.pp.powers[static_cast<size_t>(p)].second;
  IntInterval n = rhs_minus_others(store, c, l, ops);
  IntInterval d = divide_halfline_by_monomial(store, HalfLine::at_most(n),
                                              strip_power(m, p), ops);
  const IntInterval& dj = store[static_cast<size_t>(j)];
  if (np == 1) return intersect(dj, d);
  return intersect_union_hull(dj, root(d, np, ops));
}

namespace {

int monomial_sign(const DomainStore& store, const Monomial& m) {
  int s = sgn(m.coeff);
  for (const auto& [v, n] : m.pp.powers) {
    const IntInterval& d = store[static_cast<size_t>(v)];
    assert(!d.is_empty() && !d.contains_zero());
    int vs = d.lo().sign();
    if (n % 2 == 0) vs = 1;
    s *= vs;
  }
  return s;
}

}  // namespace

IntInterval poly_optimized_step(const DomainStore& store,
                                const PolyConstraint& c, const OptRuleData& d,
                                OpCounters& ops) {
  const VarId j = d.target;
  RatInterval q;
  bool first = true;
  for (const auto& g : d.groups) {
    // numerator polynomial over integer intervals
    IntInterval p_acc;
    bool p_first = true;
    for (const auto& mono : g.num) {
      IntInterval t = eval_monomial(store, mono, ops);
      p_acc = p_first ? t : add(p_acc, t, ops);
      p_first = false;
    }
    if (p_first) p_acc = IntInterval::singleton(0);
    RatInterval f;
    if (g.den.pp.is_constant() && g.den.coeff == 1) {
      f = RatInterval::from_int(p_acc);
    } else {
      IntInterval t = g.den.pp.is_constant()
                          ? IntInterval::singleton(g.den.coeff)
                          : eval_monomial(store, g.den, ops);
      f = rat_div(RatInterval::from_int(p_acc), RatInterval::from_int(t), ops);
    }
    q = first ? f : rat_add(q, f, ops);
    first = false;
  }
  if (first) q = RatInterval::point(Rational(0));

  IntInterval bounds;
  if (c.op == RelOp::Eq) {
    bounds = rat_to_int_inward(q);
  } else {
    assert(c.op == RelOp::Le);
    if (q.is_empty()) {
      bounds = IntInterval::empty();
    } else if (monomial_sign(store, d.s) > 0) {
      // x^np * s <= q  with s positive: half-line below sup q
      bounds = q.hi().is_finite()
                   ? IntInterval::at_most(floor_div(q.hi().value().get_num(),
                                                    q.hi().value().get_den()))
                   : IntInterval::all();
    } else {
      bounds = q.lo().is_finite()
                   ? IntInterval::at_least(ceil_div(q.lo().value().get_num(),
                                                    q.lo().value().get_den()))
                   : IntInterval::all();
    }
  }
  const IntInterval& dj = store[static_cast<size_t>(j)];
  if (d.root_n == 1) return intersect(dj, bounds);
  return intersect_union_hull(dj, root(bounds, d.root_n, ops));
}

std::pair<Monomial, Monomial> simplify_fraction(const Monomial& s,
                                                const Monomial& t) {
  Monomial num{s.coeff, {}}, den{t.coeff, {}};
  size_t i = 0, j = 0;
  while (i < s.pp.powers.size() || j < t.pp.powers.size()) {
    if (j == t.pp.powers.size() ||
        (i < s.pp.powers.size() && s.pp.powers[i].first < t.pp.powers[j].first)) {
      num.pp.powers.push_back(s.pp.powers[i++]);
    } else if (i == s.pp.powers.size() ||
               t.pp.powers[j].first < s.pp.powers[i].first) {
      den.pp.powers.push_back(t.pp.powers[j++]);
    } else {
      unsigned long ns = s.pp.powers[i].second, nt = t.pp.powers[j].second;
      unsigned long common = std::min(ns, nt);
      if (ns > common)
        num.pp.powers.emplace_back(s.pp.powers[i].first, ns - common);
      if (nt > common)
        den.pp.powers.emplace_back(t.pp.powers[j].first, nt - common);
      ++i;
      ++j;
    }
  }
  BigInt g = gcd(abs_big(num.coeff), abs_big(den.coeff));
  if (g > 1) {
    num.coeff /= g;
    den.coeff /= g;
  }
  if (den.coeff < 0) {
    den.coeff = -den.coeff;
    num.coeff = -num.coeff;
  }
  return {num, den};
}

IntInterval mult1_step(const DomainStore& store, const AtomicMult& m,
                       OpCounters& ops) {
  return intersect(store[static_cast<size_t>(m.z)],
                   mul_hull(store[static_cast<size_t>(m.x)],
                            store[static_cast<size_t>(m.y)], ops));
}

IntInterval mult2_step(const DomainStore& store, const AtomicMult& m,
                       OpCounters& ops) {
  return intersect(store[static_cast<size_t>(m.x)],
                   div_hull(store[static_cast<size_t>(m.z)],
                            store[static_cast<size_t>(m.y)], ops));
}

IntInterval mult3_step(const DomainStore& store, const AtomicMult& m,
                       OpCounters& ops) {
  return intersect(store[static_cast<size_t>(m.y)],
                   div_hull(store[static_cast<size_t>(m.z)],
                            store[static_cast<size_t>(m.x)], ops));
}

IntInterval exponentiation_step(const DomainStore& store, const AtomicPow& c,
                                OpCounters& ops) {
  return intersect(store[static_cast<size_t>(c.x)],
                   pow_hull(store[static_cast<size_t>(c.y)], c.n, ops));
}

IntInterval root_extraction_step(const DomainStore& store, const AtomicPow& c,
                                 OpCounters& ops) {
  return intersect_union_hull(store[static_cast<size_t>(c.y)],
                              root(store[static_cast<size_t>(c.x)], c.n, ops));
}

IntInterval disequality_step(const DomainStore& store, const PolyConstraint& c,
                             VarId j) {
  assert(c.op == RelOp::Ne);
  const IntInterval& dj = store[static_cast<size_t>(j)];
  // applicable only when every other variable is fixed
  for (VarId v : c.variables()) {
    if (v == j) continue;
    if (!store[static_cast<size_t>(v)].is_singleton()) return dj;
  }
  auto violates = [&](const BigInt& cand) {
    BigInt total = 0;
    for (const auto& m : c.monomials) {
      BigInt t = m.coeff;
      for (const auto& [v, n] : m.pp.powers) {
        const BigInt& val =
            v == j ? cand : store[static_cast<size_t>(v)].lo().value();
        t *= pow_exact(val, n);
      }
      total += t;
    }
    return total == c.rhs;
  };
  IntInterval d = dj;
  while (!d.is_empty() && d.lo().is_finite() && violates(d.lo().value()))
    d = IntInterval(Bound(d.lo().value() + 1), d.hi());
  while (!d.is_empty() && d.hi().is_finite() && violates(d.hi().value()))
    d = IntInterval(d.lo(), Bound(d.hi().value() - 1));
  return d;
}

}  // namespace intprop
