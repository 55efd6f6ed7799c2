// SPDX-License-Identifier: Apache-2.0
#include "intprop/expr.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace intprop {

ExprPtr Expr::constant(BigInt v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Constant;
  e->value = std::move(v);
  return e;
}
ExprPtr Expr::variable(VarId v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Var;
  e->var = v;
  return e;
}
ExprPtr Expr::neg(ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->a = std::move(x);
  return e;
}
ExprPtr Expr::add(ExprPtr x, ExprPtr y) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Add;
  e->a = std::move(x);
  e->b = std::move(y);
  return e;
}
ExprPtr Expr::sub(ExprPtr x, ExprPtr y) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Sub;
  e->a = std::move(x);
  e->b = std::move(y);
  return e;
}
ExprPtr Expr::mul(ExprPtr x, ExprPtr y) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Mul;
  e->a = std::move(x);
  e->b = std::move(y);
  return e;
}
ExprPtr Expr::pow(ExprPtr x, unsigned long n) {
  assert(n >= 1);
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->a = std::move(x);
  e->n = n;
  return e;
}
ExprPtr Expr::nth_root(ExprPtr x, unsigned long n) {
  assert(n >= 1);
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Root;
  e->a = std::move(x);
  e->n = n;
  return e;
}
ExprPtr Expr::quotient(ExprPtr x, ExprPtr y) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Div;
  e->a = std::move(x);
  e->b = std::move(y);
  return e;
}

bool struct_equal(const ExprPtr& x, const ExprPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Expr::Kind::Constant:
      return x->value == y->value;
    case Expr::Kind::Var:
      return x->var == y->var;
    case Expr::Kind::Neg:
      return struct_equal(x->a, y->a);
    case Expr::Kind::Pow:
    case Expr::Kind::Root:
      return x->n == y->n && struct_equal(x->a, y->a);
    default:
      return struct_equal(x->a, y->a) && struct_equal(x->b, y->b);
  }
}

std::string rel_op_str(RelOp op) {
  switch (op) {
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Eq: return "=";
    case RelOp::Ne: return "!=";
    case RelOp::Ge: return ">=";
    case RelOp::Gt: return ">";
  }
  return "?";
}

unsigned long PowerProduct::degree() const {
  unsigned long d = 0;
  for (const auto& [v, n] : powers) d += n;
  return d;
}

bool PowerProduct::contains(VarId v) const {
  for (const auto& [w, n] : powers)
    if (w == v) return true;
  return false;
}

unsigned long PowerProduct::exponent_of(VarId v) const {
  for (const auto& [w, n] : powers)
    if (w == v) return n;
  return 0;
}

bool pp_precedes(const PowerProduct& a, const PowerProduct& b) {
  size_t i = 0, j = 0;
  while (i < a.powers.size() || j < b.powers.size()) {
    if (i == a.powers.size()) return false;  // a ran out: exponent 0 at b's var
    if (j == b.powers.size()) return true;
    const auto& [va, na] = a.powers[i];
    const auto& [vb, nb] = b.powers[j];
    if (va < vb) return true;   // a has positive exponent where b has 0
    if (vb < va) return false;
    if (na != nb) return na > nb;
    ++i;
    ++j;
  }
  return false;
}

std::string PowerProduct::str(const std::vector<std::string>& names) const {
  std::string s;
  for (size_t i = 0; i < powers.size(); ++i) {
    if (i) s += "*";
    s += names[powers[i].first];
    if (powers[i].second > 1) s += "^" + std::to_string(powers[i].second);
  }
  return s;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  if (pp.is_constant()) return coeff.get_str();
  if (coeff == 1) return pp.str(names);
  if (coeff == -1) return "-" + pp.str(names);
  return coeff.get_str() + "*" + pp.str(names);
}

bool PolyConstraint::ground_truth() const {
  assert(is_ground());
  return rel_holds(op, BigInt(0), rhs);
}

bool PolyConstraint::is_linear() const {
  for (const auto& m : monomials)
    if (m.degree() > 1) return false;
  return true;
}

std::vector<VarId> PolyConstraint::variables() const {
  std::vector<VarId> vs;
  for (const auto& m : monomials)
    for (const auto& [v, n] : m.pp.powers) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::string PolyConstraint::str(const std::vector<std::string>& names) const {
  std::string s;
  for (size_t i = 0; i < monomials.size(); ++i) {
    const Monomial& m = monomials[i];
    if (i == 0) {
      s += m.str(names);
    } else if (m.coeff > 0) {
      s += " + " + m.str(names);
    } else {
      Monomial flipped{-m.coeff, m.pp};
      s += " - " + flipped.str(names);
    }
  }
  if (monomials.empty()) s += "0";
  s += " " + rel_op_str(op) + " " + rhs.get_str();
  return s;
}

namespace {

using PolyMap = std::map<PowerProduct, BigInt>;

void add_term(PolyMap& m, const PowerProduct& pp, const BigInt& c) {
  auto it = m.find(pp);
  if (it == m.end()) {
    if (c != 0) m.emplace(pp, c);
    return;
  }
  it->second += c;
  if (it->second == 0) m.erase(it);
}

PolyMap poly_mul(const PolyMap& x, const PolyMap& y) {
  PolyMap out;
  for (const auto& [pa, ca] : x) {
    for (const auto& [pb, cb] : y) {
      // merge power products
      PowerProduct pp;
      size_t i = 0, j = 0;
      while (i < pa.powers.size() || j < pb.powers.size()) {
        if (j == pb.powers.size() ||
            (i < pa.powers.size() && pa.powers[i].first < pb.powers[j].first)) {
          pp.powers.push_back(pa.powers[i++]);
        } else if (i == pa.powers.size() ||
                   pb.powers[j].first < pa.powers[i].first) {
          pp.powers.push_back(pb.powers[j++]);
        } else {
          pp.powers.emplace_back(pa.powers[i].first,
                                 pa.powers[i].second + pb.powers[j].second);
          ++i;
          ++j;
        }
      }
      add_term(out, pp, ca * cb);
    }
  }
  return out;
}

PolyMap poly_of(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Constant: {
      PolyMap m;
      add_term(m, PowerProduct{}, e->value);
      return m;
    }
    case Expr::Kind::Var: {
      PolyMap m;
      PowerProduct pp;
      pp.powers.emplace_back(e->var, 1);
      add_term(m, pp, BigInt(1));
      return m;
    }
    case Expr::Kind::Neg: {
      PolyMap m = poly_of(e->a);
      for (auto& [pp, c] : m) c = -c;
      return m;
    }
    case Expr::Kind::Add: {
      PolyMap m = poly_of(e->a);
      for (const auto& [pp, c] : poly_of(e->b)) add_term(m, pp, c);
      return m;
    }
    case Expr::Kind::Sub: {
      PolyMap m = poly_of(e->a);
      for (const auto& [pp, c] : poly_of(e->b)) add_term(m, pp, BigInt(-c));
      return m;
    }
    case Expr::Kind::Mul:
      return poly_mul(poly_of(e->a), poly_of(e->b));
    case Expr::Kind::Pow: {
      PolyMap base = poly_of(e->a);
      PolyMap acc;
      add_term(acc, PowerProduct{}, BigInt(1));
      for (unsigned long k = 0; k < e->n; ++k) acc = poly_mul(acc, base);
      return acc;
    }
    default:
      assert(false && "extended operator in user constraint");
      return {};
  }
}

}  // namespace

PolyConstraint normalize(const ArithConstraint& c) {
  PolyMap m = poly_of(Expr::sub(c.lhs, c.rhs));
  BigInt b = 0;
  auto k = m.find(PowerProduct{});
  if (k != m.end()) {
    b = -k->second;
    m.erase(k);
  }
  PolyConstraint p;
  p.op = c.op;
  p.rhs = b;
  for (auto& [pp, coeff] : m) p.monomials.push_back(Monomial{coeff, pp});
  std::sort(p.monomials.begin(), p.monomials.end(),
            [](const Monomial& x, const Monomial& y) {
              return pp_precedes(x.pp, y.pp);
            });
  // strict bounds absorb one unit over the integers
  if (p.op == RelOp::Lt) {
    p.op = RelOp::Le;
    p.rhs -= 1;
  } else if (p.op == RelOp::Gt) {
    p.op = RelOp::Ge;
    p.rhs += 1;
  }
  if (p.op == RelOp::Ge) {
    p.op = RelOp::Le;
    p.rhs = -p.rhs;
    for (auto& mo : p.monomials) mo.coeff = -mo.coeff;
  }
  return p;
}

ArithConstraint to_arith(const PolyConstraint& p) {
  ExprPtr lhs;
  for (const auto& m : p.monomials) {
    ExprPtr term =
        (m.coeff == 1 && !m.pp.is_constant()) ? nullptr : Expr::constant(m.coeff);
    for (const auto& [v, n] : m.pp.powers) {
      ExprPtr f = Expr::variable(v);
      if (n > 1) f = Expr::pow(f, n);
      term = term ? Expr::mul(term, f) : f;
    }
    lhs = lhs ? Expr::add(lhs, term) : term;
  }
  if (!lhs) lhs = Expr::constant(BigInt(0));
  return ArithConstraint{lhs, p.op, Expr::constant(p.rhs)};
}

bool is_simple(const PolyConstraint& p) {
  return duplicate_occurrence_report(p).empty();
}

std::vector<VarId> duplicate_occurrence_report(const PolyConstraint& p) {
  std::map<VarId, int> count;
  for (const auto& m : p.monomials)
    for (const auto& [v, n] : m.pp.powers) ++count[v];
  std::vector<VarId> dup;
  for (const auto& [v, c] : count)
    if (c >= 2) dup.push_back(v);
  return dup;
}

BigInt eval_expr(const ExprPtr& e, const std::vector<BigInt>& a) {
  switch (e->kind) {
    case Expr::Kind::Constant:
      return e->value;
    case Expr::Kind::Var:
      return a[static_cast<size_t>(e->var)];
    case Expr::Kind::Neg:
      return -eval_expr(e->a, a);
    case Expr::Kind::Add:
      return eval_expr(e->a, a) + eval_expr(e->b, a);
    case Expr::Kind::Sub:
      return eval_expr(e->a, a) - eval_expr(e->b, a);
    case Expr::Kind::Mul:
      return eval_expr(e->a, a) * eval_expr(e->b, a);
    case Expr::Kind::Pow:
      return pow_exact(eval_expr(e->a, a), e->n);
    default:
      assert(false && "extended operator has no point evaluation here");
      return BigInt(0);
  }
}

bool rel_holds(RelOp op, const BigInt& lhs, const BigInt& rhs) {
  switch (op) {
    case RelOp::Lt: return lhs < rhs;
    case RelOp::Le: return lhs <= rhs;
    case RelOp::Eq: return lhs == rhs;
    case RelOp::Ne: return lhs != rhs;
    case RelOp::Ge: return lhs >= rhs;
    case RelOp::Gt: return lhs > rhs;
  }
  return false;
}

bool eval_constraint(const ArithConstraint& c,
                     const std::vector<BigInt>& assignment) {
  return rel_holds(c.op, eval_expr(c.lhs, assignment),
                   eval_expr(c.rhs, assignment));
}

bool eval_poly_constraint(const PolyConstraint& p,
                          const std::vector<BigInt>& assignment) {
  BigInt total = 0;
  for (const auto& m : p.monomials) {
    BigInt t = m.coeff;
    for (const auto& [v, n] : m.pp.powers)
      t *= pow_exact(assignment[static_cast<size_t>(v)], n);
    total += t;
  }
  return rel_holds(p.op, total, p.rhs);
}

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Neg:
      return 2;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 3;
    case Expr::Kind::Pow:
    case Expr::Kind::Root:
      return 4;
    default:
      return 5;
  }
}

void print_expr(std::ostringstream& os, const ExprPtr& e,
                const std::vector<std::string>& names, int parent_prec) {
  int prec = precedence(e->kind);
  bool paren = prec < parent_prec;
  if (paren) os << "(";
  switch (e->kind) {
    case Expr::Kind::Constant:
      if (e->value < 0 && parent_prec > 1 && !paren) {
        os << "(" << e->value.get_str() << ")";
      } else {
        os << e->value.get_str();
      }
      break;
    case Expr::Kind::Var:
      os << names[static_cast<size_t>(e->var)];
      break;
    case Expr::Kind::Neg:
      os << "-";
      print_expr(os, e->a, names, prec + 1);
      break;
    case Expr::Kind::Add:
      print_expr(os, e->a, names, prec);
      os << " + ";
      print_expr(os, e->b, names, prec + 1);
      break;
    case Expr::Kind::Sub:
      print_expr(os, e->a, names, prec);
      os << " - ";
      print_expr(os, e->b, names, prec + 1);
      break;
    case Expr::Kind::Mul:
      print_expr(os, e->a, names, prec);
      os << "*";
      print_expr(os, e->b, names, prec + 1);
      break;
    case Expr::Kind::Div:
      print_expr(os, e->a, names, prec);
      os << "/";
      print_expr(os, e->b, names, prec + 1);
      break;
    case Expr::Kind::Pow:
      print_expr(os, e->a, names, prec + 1);
      os << "^" << e->n;
      break;
    case Expr::Kind::Root:
      os << "root" << e->n << "(";
      print_expr(os, e->a, names, 0);
      os << ")";
      break;
  }
  if (paren) os << ")";
}

}  // namespace

std::string expr_str(const ExprPtr& e, const std::vector<std::string>& names) {
  std::ostringstream os;
  print_expr(os, e, names, 0);
  return os.str();
}

std::string pretty_print(const CspModel& model) {
  std::ostringstream os;
  std::vector<std::string> names;
  for (const auto& v : model.vars) names.push_back(v.name);
  for (const auto& v : model.vars) {
    os << "var " << v.name << " in ";
    if (v.domain.is_all()) {
      os << "Z";
    } else if (v.domain.is_empty()) {
      os << "[1..0]";
    } else {
      os << "[" << v.domain.lo().value().get_str() << ".."
         << v.domain.hi().value().get_str() << "]";
    }
    os << ";\n";
  }
  for (const auto& c : model.constraints) {
    os << expr_str(c.lhs, names) << " " << rel_op_str(c.op) << " "
       << expr_str(c.rhs, names) << ";\n";
  }
  if (model.objective) {
    os << "maximize " << expr_str(*model.objective, names) << ";\n";
  }
  return os.str();
}

}  // namespace intprop
