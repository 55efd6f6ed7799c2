// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intprop/expr.hpp"
#include "intprop/rules.hpp"

namespace intprop {

// The seven rewriting approaches: plain and fraction-optimized polynomial
// rules (1a/1b), simple polynomial constraints via auxiliary variables
// (2a/2b), and atomic constraints (3a: multiplication only, 3b: squaring
// atomic, 3c: all powers atomic).
enum class Approach { A1a, A1b, A2a, A2b, A3a, A3b, A3c };

const char* approach_str(Approach a);
std::optional<Approach> approach_from_string(const std::string& s);

// Definition of one auxiliary variable.
struct AuxDef {
  enum class Kind {
    Product,  // aux = power product over prior variables (approach 2)
    Mult,     // aux = a * b (approach 3)
    Pow,      // aux = base ^ n (approaches 3b/3c)
  };
  VarId var = -1;
  Kind kind = Kind::Product;
  PowerProduct pp;    // Product
  VarId a = -1, b = -1;  // Mult factors
  VarId base = -1;
  unsigned long n = 0;  // Pow exponent
};

struct CompiledConstraint {
  PolyConstraint poly;
  bool user = true;    // false: auxiliary-variable definition
  int aux_index = -1;  // defined aux (into CompiledCsp::aux) when !user
};

// A model compiled for one approach: variables (original then auxiliary),
// root domains, the constraint tables, the DRF sequence, and a hierarchical
// schedule (forward evaluation / backward propagation around each user DRF).
struct CompiledCsp {
  std::vector<std::string> var_names;
  DomainStore initial;
  int original_vars = 0;

  std::vector<CompiledConstraint> polys;
  std::vector<AtomicMult> mults;  // z is the defined aux
  std::vector<AtomicPow> pows;    // x is the defined aux
  std::vector<AuxDef> aux;        // creation order extends the var ordering

  std::vector<DrfInstance> drfs;
  std::vector<int> schedule;

  bool ground_false = false;
  VarId objective_var = -1;  // present in maximize compilations
  int bound_drf = -1;        // index of the uncounted objective-bound DRF

  OpCounters compile_ops;  // interval work spent on aux initial domains

  int var_count() const { return static_cast<int>(var_names.size()); }
  int counted_drfs() const;
};

// Hull evaluation of an auxiliary variable's defining expression.
IntInterval aux_domain(const AuxDef& def, const DomainStore& store,
                       OpCounters& ops);

// Rewrite a model into the DRF set and schedule of the chosen approach.
// with_objective materializes the maximization objective as a variable with
// a defining constraint plus an uncounted bound-tightening DRF.
CompiledCsp compile(const CspModel& model, Approach approach,
                    bool with_objective = false);

}  // namespace intprop
