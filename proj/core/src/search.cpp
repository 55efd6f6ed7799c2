// SPDX-License-Identifier: Apache-2.0
#include "intprop/search.hpp"

#include <cassert>
#include <chrono>

namespace intprop {

bool verify_solution(const CspModel& model, const Assignment& assignment) {
  assert(assignment.size() == model.vars.size());
  for (const auto& c : model.constraints)
    if (!eval_constraint(c, assignment)) return false;
  return true;
}

namespace {

class Search {
 public:
  Search(const CompiledCsp& csp, const CspModel& model,
         const SearchConfig& config)
      : csp_(csp),
        model_(model),
        config_(config),
        engine_(csp, config.schedule) {}

  SearchOutcome run() {
    out_.stats.ops += csp_.compile_ops;
    if (csp_.ground_false) return std::move(out_);
    DomainStore store = csp_.initial;
    for (const auto& d : store)
      if (d.is_empty()) return std::move(out_);
    dfs(store);
    return std::move(out_);
  }

 private:
  void dfs(DomainStore& store) {
    if (out_.truncated) return;
    if (config_.node_limit && out_.stats.nodes >= *config_.node_limit) {
      out_.truncated = true;
      return;
    }
    ++out_.stats.nodes;
    PropagationResult res = engine_.propagate(store, out_.stats, best_);
    if (res.status == PropagationStatus::EmptyDomain) return;

    VarId branch = -1;
    for (VarId v = 0; v < csp_.var_count(); ++v) {
      if (!store[static_cast<size_t>(v)].is_singleton()) {
        branch = v;
        break;
      }
    }
    if (branch < 0) {
      leaf(store);
      return;
    }
    const IntInterval& dom = store[static_cast<size_t>(branch)];
    if (!dom.is_finite())
      throw UnboundedVariableError(csp_.var_names[static_cast<size_t>(branch)]);

    BigInt a = dom.lo().value(), b = dom.hi().value();
    BigInt mid = floor_div(a + b, BigInt(2));
    {
      DomainStore left = store;
      left[static_cast<size_t>(branch)] = IntInterval::finite(a, mid);
      dfs(left);
    }
    {
      DomainStore right = std::move(store);
      right[static_cast<size_t>(branch)] = IntInterval::finite(mid + 1, b);
      dfs(right);
    }
  }

  void leaf(const DomainStore& store) {
    Assignment assignment;
    assignment.reserve(model_.vars.size());
    for (size_t i = 0; i < model_.vars.size(); ++i)
      assignment.push_back(store[i].lo().value());
    // guard the instrumentation against rule bugs
    if (!verify_solution(model_, assignment))
      throw std::logic_error("propagation fixpoint is not a solution");
    if (config_.mode == SearchConfig::Mode::Maximize) {
      BigInt value = eval_expr(*model_.objective, assignment);
      if (!best_ || value > *best_) {
        best_ = value;
        out_.best_objective = value;
        out_.best_solution = assignment;
      }
    } else {
      out_.solutions.push_back(std::move(assignment));
    }
  }

  const CompiledCsp& csp_;
  const CspModel& model_;
  SearchConfig config_;
  Engine engine_;
  SearchOutcome out_;
  std::optional<BigInt> best_;
};

}  // namespace

SearchOutcome solve_compiled(const CompiledCsp& csp, const CspModel& model,
                             const SearchConfig& config) {
  auto start = std::chrono::steady_clock::now();
  Search search(csp, model, config);
  SearchOutcome out = search.run();
  out.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

SearchOutcome solve(const CspModel& model, Approach approach,
                    const SearchConfig& config) {
  if (config.mode == SearchConfig::Mode::Maximize && !model.objective)
    throw std::invalid_argument("maximize requested but model has no objective");
  CompiledCsp csp = compile(model, approach,
                            config.mode == SearchConfig::Mode::Maximize);
  return solve_compiled(csp, model, config);
}

}  // namespace intprop
