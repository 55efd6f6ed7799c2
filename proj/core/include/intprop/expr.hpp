// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "intprop/bigint.hpp"
#include "intprop/interval.hpp"

namespace intprop {

// Variable identifier: index in declaration order. Declaration order is the
// variable ordering; auxiliary variables extend it at the end.
using VarId = int;

// Arithmetic expression tree. Pow appears in user input as exponent sugar;
// Root and Div belong to the extended language used only inside reduction
// rules and never come out of the parser.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Constant, Var, Neg, Add, Sub, Mul, Pow, Root, Div };

  Kind kind;
  BigInt value;     // Constant
  VarId var = -1;   // Var
  unsigned long n = 0;  // Pow / Root
  ExprPtr a, b;

  static ExprPtr constant(BigInt v);
  static ExprPtr variable(VarId v);
  static ExprPtr neg(ExprPtr e);
  static ExprPtr add(ExprPtr x, ExprPtr y);
  static ExprPtr sub(ExprPtr x, ExprPtr y);
  static ExprPtr mul(ExprPtr x, ExprPtr y);
  static ExprPtr pow(ExprPtr e, unsigned long n);
  static ExprPtr nth_root(ExprPtr e, unsigned long n);
  static ExprPtr quotient(ExprPtr x, ExprPtr y);
};

bool struct_equal(const ExprPtr& x, const ExprPtr& y);

enum class RelOp { Lt, Le, Eq, Ne, Ge, Gt };

std::string rel_op_str(RelOp op);

struct ArithConstraint {
  ExprPtr lhs;
  RelOp op;
  ExprPtr rhs;
};

// Power product: distinct variables with positive exponents, ascending by
// the variable ordering.
struct PowerProduct {
  std::vector<std::pair<VarId, unsigned long>> powers;

  bool is_constant() const { return powers.empty(); }
  unsigned long degree() const;
  bool contains(VarId v) const;
  unsigned long exponent_of(VarId v) const;

  friend bool operator==(const PowerProduct& a, const PowerProduct& b) {
    return a.powers == b.powers;
  }
  friend bool operator<(const PowerProduct& a, const PowerProduct& b) {
    return a.powers < b.powers;
  }
  std::string str(const std::vector<std::string>& names) const;
};

// Display order of monomials: at the first variable (in declaration order)
// where two power products differ, the one with the larger exponent comes
// first. This reproduces the usual x-major polynomial layout.
bool pp_precedes(const PowerProduct& a, const PowerProduct& b);

struct Monomial {
  BigInt coeff;  // non-zero
  PowerProduct pp;

  unsigned long degree() const { return pp.degree(); }
  bool is_linear() const { return pp.degree() == 1; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coeff == b.coeff && a.pp == b.pp;
  }
  std::string str(const std::vector<std::string>& names) const;
};

// Normalized polynomial constraint: sum of monomials `op` integer, with
// pairwise distinct power products and no constant monomial. After
// normalization op is one of Le, Eq, Ne. An empty monomial list is a ground
// constraint 0 op rhs.
struct PolyConstraint {
  std::vector<Monomial> monomials;
  RelOp op = RelOp::Eq;
  BigInt rhs;

  bool is_ground() const { return monomials.empty(); }
  bool ground_truth() const;  // pre: is_ground()
  bool is_linear() const;

  std::vector<VarId> variables() const;  // sorted, unique

  friend bool operator==(const PolyConstraint& a, const PolyConstraint& b) {
    return a.monomials == b.monomials && a.op == b.op && a.rhs == b.rhs;
  }
  std::string str(const std::vector<std::string>& names) const;
};

struct VarDecl {
  std::string name;
  IntInterval domain;
};

// <C; x1 in D1, ..., xn in Dn> plus an optional maximization objective.
struct CspModel {
  std::vector<VarDecl> vars;
  std::vector<ArithConstraint> constraints;
  std::optional<ExprPtr> objective;

  VarId var_count() const { return static_cast<VarId>(vars.size()); }
};

// Transform an arithmetic constraint into a polynomial constraint: all
// monomials on the left, like power products collected, the constant folded
// into the right-hand side, and the relation normalized so that only
// <=, =, != remain (strict bounds absorb one unit; >= is negated).
PolyConstraint normalize(const ArithConstraint& c);

// Turn a polynomial constraint back into a flat arithmetic constraint
// (used to state idempotence of normalize).
ArithConstraint to_arith(const PolyConstraint& p);

// True iff no variable occurs in two monomials; an exponent > 1 still
// counts as a single occurrence.
bool is_simple(const PolyConstraint& p);

// Variables occurring in two or more monomials, ascending.
std::vector<VarId> duplicate_occurrence_report(const PolyConstraint& p);

// Exact evaluation over a full assignment.
BigInt eval_expr(const ExprPtr& e, const std::vector<BigInt>& assignment);
bool eval_constraint(const ArithConstraint& c,
                     const std::vector<BigInt>& assignment);
bool eval_poly_constraint(const PolyConstraint& p,
                          const std::vector<BigInt>& assignment);
bool rel_holds(RelOp op, const BigInt& lhs, const BigInt& rhs);

std::string expr_str(const ExprPtr& e, const std::vector<std::string>& names);

// Model text in the input format; parses back to a structurally identical
// model.
std::string pretty_print(const CspModel& model);

}  // namespace intprop
