// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intprop/engine.hpp"

namespace intprop {

// A built-in benchmark: name plus model source text.
struct BenchmarkDef {
  std::string name;
  std::string source;
};

// The five benchmark models: cubes, opt, fractions1, fractions2, kyoto.
std::vector<BenchmarkDef> builtin_models();
std::optional<BenchmarkDef> find_benchmark(const std::string& name);

// Domain-parameterized opt model (the full benchmark uses hi = 100000).
std::string opt_model_source(const std::string& hi);

// One report row in the shape of the benchmark statistics tables.
struct StatsRow {
  std::string benchmark;
  std::string approach;
  int nvar = 0;
  int ndrf = 0;
  unsigned long nodes = 0;
  unsigned long activated = 0;
  double effective_pct = 0.0;
  double elapsed = 0.0;
  OpCounters ops;
  unsigned long solutions = 0;
  std::optional<BigInt> best;
  bool truncated = false;
};

std::string stats_header();
std::string format_row(const StatsRow& row);

}  // namespace intprop
