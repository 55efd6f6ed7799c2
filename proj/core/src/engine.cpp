// SPDX-License-Identifier: Apache-2.0
#include "intprop/engine.hpp"

#include <cassert>
#include <deque>

namespace intprop {

Engine::Engine(const CompiledCsp& csp, ScheduleMode mode)
    : csp_(csp), mode_(mode) {
  dependents_.resize(static_cast<size_t>(csp.var_count()));
  for (int i = 0; i < static_cast<int>(csp.drfs.size()); ++i)
    for (VarId v : csp.drfs[static_cast<size_t>(i)].depends_on)
      dependents_[static_cast<size_t>(v)].push_back(i);
}

IntInterval Engine::apply(int drf_index, const DomainStore& store,
                          OpCounters& ops,
                          const std::optional<BigInt>& obj_lower) const {
  const DrfInstance& d = csp_.drfs[static_cast<size_t>(drf_index)];
  switch (d.kind) {
    case RuleKind::LinearEq:
      return linear_equality_step(
          store, csp_.polys[static_cast<size_t>(d.constraint)].poly, d.target,
          ops);
    case RuleKind::LinearIneq:
      return linear_inequality_step(
          store, csp_.polys[static_cast<size_t>(d.constraint)].poly, d.target,
          ops);
    case RuleKind::PolyEq:
      return poly_equality_step(
          store, csp_.polys[static_cast<size_t>(d.constraint)].poly,
          d.monomial, d.position, ops);
    case RuleKind::PolyIneq:
      return poly_inequality_step(
          store, csp_.polys[static_cast<size_t>(d.constraint)].poly,
          d.monomial, d.position, ops);
    case RuleKind::PolyEqOpt:
    case RuleKind::PolyIneqOpt:
      return poly_optimized_step(
          store, csp_.polys[static_cast<size_t>(d.constraint)].poly, *d.opt,
          ops);
    case RuleKind::Mult1:
      return mult1_step(store, csp_.mults[static_cast<size_t>(d.constraint)],
                        ops);
    case RuleKind::Mult2:
      return mult2_step(store, csp_.mults[static_cast<size_t>(d.constraint)],
                        ops);
    case RuleKind::Mult3:
      return mult3_step(store, csp_.mults[static_cast<size_t>(d.constraint)],
                        ops);
    case RuleKind::Exponentiation:
      return exponentiation_step(
          store, csp_.pows[static_cast<size_t>(d.constraint)], ops);
    case RuleKind::RootExtraction:
      return root_extraction_step(
          store, csp_.pows[static_cast<size_t>(d.constraint)], ops);
    case RuleKind::Diseq:
      return disequality_step(
          store, csp_.polys[static_cast<size_t>(d.constraint)].poly, d.target);
    case RuleKind::ObjBound: {
      const IntInterval& dom = store[static_cast<size_t>(d.target)];
      if (!obj_lower) return dom;
      return intersect(dom, IntInterval::at_least(*obj_lower + 1));
    }
  }
  return IntInterval::empty();
}

PropagationResult Engine::propagate(DomainStore& store, RunStats& stats,
                                    const std::optional<BigInt>& obj_lower)
    const {
  const int n = static_cast<int>(csp_.drfs.size());
  if (n == 0) return {};

  // apply one DRF; returns false when a domain became empty
  auto step = [&](int i, auto&& wake) -> bool {
    const DrfInstance& d = csp_.drfs[static_cast<size_t>(i)];
    if (d.counted) ++stats.activations;
    IntInterval next = apply(i, store, stats.ops, obj_lower);
    IntInterval& cur = store[static_cast<size_t>(d.target)];
    if (next == cur) return true;
    if (d.counted) ++stats.effective;
    cur = next;
    if (cur.is_empty()) return false;
    wake(d.target);
    return true;
  };

  if (mode_ == ScheduleMode::Cycling) {
    std::deque<int> queue;
    std::vector<char> queued(static_cast<size_t>(n), 1);
    for (int i = 0; i < n; ++i) queue.push_back(i);
    auto wake = [&](VarId v) {
      for (int j : dependents_[static_cast<size_t>(v)]) {
        if (!queued[static_cast<size_t>(j)]) {
          queued[static_cast<size_t>(j)] = 1;
          queue.push_back(j);
        }
      }
    };
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      queued[static_cast<size_t>(i)] = 0;
      if (!step(i, wake))
        return {PropagationStatus::EmptyDomain,
                csp_.drfs[static_cast<size_t>(i)].target};
    }
    return {};
  }

  // hierarchical: cycle through the schedule, applying flagged DRFs
  const std::vector<int>& sched = csp_.schedule;
  assert(!sched.empty());
  std::vector<char> flagged(static_cast<size_t>(n), 1);
  int remaining = n;
  auto wake = [&](VarId v) {
    for (int j : dependents_[static_cast<size_t>(v)]) {
      if (!flagged[static_cast<size_t>(j)]) {
        flagged[static_cast<size_t>(j)] = 1;
        ++remaining;
      }
    }
  };
  size_t pos = 0;
  while (remaining > 0) {
    int i = sched[pos];
    pos = (pos + 1) % sched.size();
    if (!flagged[static_cast<size_t>(i)]) continue;
    flagged[static_cast<size_t>(i)] = 0;
    --remaining;
    if (!step(i, wake))
      return {PropagationStatus::EmptyDomain,
              csp_.drfs[static_cast<size_t>(i)].target};
  }
  return {};
}

}  // namespace intprop
