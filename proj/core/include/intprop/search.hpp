// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intprop/engine.hpp"

namespace intprop {

struct SearchConfig {
  enum class Mode { AllSolutions, Maximize };
  Mode mode = Mode::AllSolutions;
  ScheduleMode schedule = ScheduleMode::Cycling;
  std::optional<unsigned long> node_limit;
};

// Assignment to the original model variables, in declaration order.
using Assignment = std::vector<BigInt>;

struct SearchOutcome {
  std::vector<Assignment> solutions;      // all-solutions mode
  std::optional<BigInt> best_objective;   // maximize mode
  std::optional<Assignment> best_solution;
  RunStats stats;
  bool truncated = false;  // node limit reached
};

// Branching reached a variable that root propagation failed to bound.
struct UnboundedVariableError : std::runtime_error {
  explicit UnboundedVariableError(const std::string& var)
      : std::runtime_error("unbounded domain for branching variable '" + var +
                           "'"),
        variable(var) {}
  std::string variable;
};

// Depth-first leftmost branch-and-infer search: propagate to fixpoint at
// every node, bisect the first non-singleton variable in chronological
// order (auxiliary variables last by construction), left half first. Every
// node is counted, failures and solutions included. Maximize mode tightens
// an objective lower bound after each improving solution.
SearchOutcome solve(const CspModel& model, Approach approach,
                    const SearchConfig& config);

// Same, against an already compiled CSP (the objective machinery must match
// config.mode).
SearchOutcome solve_compiled(const CompiledCsp& csp, const CspModel& model,
                             const SearchConfig& config);

// Direct exact evaluation of every model constraint.
bool verify_solution(const CspModel& model, const Assignment& assignment);

}  // namespace intprop
