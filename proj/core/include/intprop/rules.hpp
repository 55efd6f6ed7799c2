// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "intprop/expr.hpp"
#include "intprop/interval.hpp"
#include "intprop/rational.hpp"

namespace intprop {

// Domain store: one interval per variable, indexed by VarId.
using DomainStore = std::vector<IntInterval>;

enum class RuleKind {
  LinearEq,
  LinearIneq,
  PolyEq,
  PolyIneq,
  PolyEqOpt,
  PolyIneqOpt,
  Mult1,
  Mult2,
  Mult3,
  Exponentiation,
  RootExtraction,
  Diseq,
  ObjBound,
};

const char* rule_kind_str(RuleKind k);

// x * y = z
struct AtomicMult {
  VarId x, y, z;
};

// x = y^n, n > 1
struct AtomicPow {
  VarId x, y;
  unsigned long n;
};

// One simplified fraction group p_t / t of the optimized rules.
struct OptFractionGroup {
  Monomial den;               // t, with positive coefficient
  std::vector<Monomial> num;  // the polynomial p_t
};

// Precompiled data for a fraction-simplified rule instance.
struct OptRuleData {
  VarId target = -1;
  std::vector<OptFractionGroup> groups;
  Monomial s;  // selected monomial without the target power; sign source
  unsigned long root_n = 1;
};

// One schedulable domain-reduction function: a rule instance bound to a
// constraint and a target variable.
struct DrfInstance {
  RuleKind kind;
  int constraint = -1;  // index into the compiled constraint tables
  VarId target = -1;
  int monomial = -1;  // l: selected monomial, polynomial rules only
  int position = -1;  // p: variable position inside that monomial
  std::vector<VarId> depends_on;  // all constraint variables, target included
  bool counted = true;  // the objective-bound DRF is excluded from stats
  std::shared_ptr<const OptRuleData> opt;
};

// --- rule steps -------------------------------------------------------------
// Each step computes the new domain of its target variable; the caller
// intersects nothing further. An empty result signals inconsistency.

// D_j /\ (b - sum_{i != j} int(a_i D_i)) / a_j
IntInterval linear_equality_step(const DomainStore& store,
                                 const PolyConstraint& c, VarId j,
                                 OpCounters& ops);

// D_j /\ (<= int(b - sum int(a_i D_i))) / a_j
IntInterval linear_inequality_step(const DomainStore& store,
                                   const PolyConstraint& c, VarId j,
                                   OpCounters& ops);

// int(D_j /\ root_np(int((b - sum_{i != l} m_i) / s)))
IntInterval poly_equality_step(const DomainStore& store,
                               const PolyConstraint& c, int l, int p,
                               OpCounters& ops);

// Half-line variant for <= constraints.
IntInterval poly_inequality_step(const DomainStore& store,
                                 const PolyConstraint& c, int l, int p,
                                 OpCounters& ops);

// Fraction-simplified variant (both = and <=), evaluated over rational
// intervals. Preconditions (0-free domains of s's variables) are the
// compiler's responsibility.
IntInterval poly_optimized_step(const DomainStore& store,
                                const PolyConstraint& c, const OptRuleData& d,
                                OpCounters& ops);

// [s/t]: cancel common variable powers and the coefficient gcd; the
// denominator keeps a positive coefficient.
std::pair<Monomial, Monomial> simplify_fraction(const Monomial& s,
                                                const Monomial& t);

IntInterval mult1_step(const DomainStore& store, const AtomicMult& m,
                       OpCounters& ops);  // z
IntInterval mult2_step(const DomainStore& store, const AtomicMult& m,
                       OpCounters& ops);  // x
IntInterval mult3_step(const DomainStore& store, const AtomicMult& m,
                       OpCounters& ops);  // y

IntInterval exponentiation_step(const DomainStore& store, const AtomicPow& c,
                                OpCounters& ops);  // x
IntInterval root_extraction_step(const DomainStore& store, const AtomicPow& c,
                                 OpCounters& ops);  // y

// Routine endpoint pruning for != constraints: applicable once every other
// variable is fixed.
IntInterval disequality_step(const DomainStore& store, const PolyConstraint& c,
                             VarId j);

// Shared evaluation helpers (also used by the compiler for aux domains).
IntInterval eval_monomial(const DomainStore& store, const Monomial& m,
                          OpCounters& ops);
IntInterval eval_power_product(const DomainStore& store, const PowerProduct& pp,
                               OpCounters& ops);

}  // namespace intprop
