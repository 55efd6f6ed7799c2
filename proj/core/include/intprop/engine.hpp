// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "intprop/rewrite.hpp"

namespace intprop {

enum class ScheduleMode { Cycling, Hierarchical };

struct RunStats {
  unsigned long nodes = 0;
  unsigned long activations = 0;
  unsigned long effective = 0;
  OpCounters ops;
  double elapsed_seconds = 0.0;

  double effective_pct() const {
    if (activations == 0) return 0.0;
    return 100.0 * static_cast<double>(effective) /
           static_cast<double>(activations);
  }
};

enum class PropagationStatus { Fixpoint, EmptyDomain };

struct PropagationResult {
  PropagationStatus status = PropagationStatus::Fixpoint;
  VarId empty_var = -1;
};

// Fixpoint propagation over a fixed DRF sequence. Cycling mode services a
// FIFO work set; hierarchical mode walks the compiled schedule cyclically,
// applying DRFs that are flagged for execution. Both stop at quiescence or
// on an empty domain.
class Engine {
 public:
  Engine(const CompiledCsp& csp, ScheduleMode mode);

  PropagationResult propagate(DomainStore& store, RunStats& stats,
                              const std::optional<BigInt>& obj_lower) const;

  // One rule application; exposed for rule-level tests.
  IntInterval apply(int drf_index, const DomainStore& store, OpCounters& ops,
                    const std::optional<BigInt>& obj_lower) const;

  const CompiledCsp& csp() const { return csp_; }

 private:
  const CompiledCsp& csp_;
  ScheduleMode mode_;
  std::vector<std::vector<int>> dependents_;  // var -> dependent DRFs
};

}  // namespace intprop
