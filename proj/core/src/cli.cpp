// SPDX-License-Identifier: Apache-2.0
#include "intprop/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "intprop/bench.hpp"
#include "intprop/parser.hpp"
#include "intprop/search.hpp"

namespace intprop {

namespace {

bool schedule_default_hierarchical(Approach a) {
  switch (a) {
    case Approach::A1a:
    case Approach::A1b:
      return false;
    default:
      return true;  // approaches with auxiliary variables use the schedule
  }
}

void write_stats_json(const std::string& path, const StatsRow& row) {
  nlohmann::json j{
      {"benchmark", row.benchmark},
      {"approach", row.approach},
      {"nvar", row.nvar},
      {"ndrf", row.ndrf},
      {"nodes", row.nodes},
      {"activated", row.activated},
      {"effective_pct", row.effective_pct},
      {"elapsed", row.elapsed},
      {"root", row.ops.root},
      {"exp", row.ops.exp},
      {"div", row.ops.div},
      {"mult_i", row.ops.mult_i},
      {"mult_f", row.ops.mult_f},
      {"sum", row.ops.sum},
      {"div_q", row.ops.div_q},
      {"sum_q", row.ops.sum_q},
      {"solutions", row.solutions},
      {"truncated", row.truncated},
  };
  if (row.best) j["best"] = row.best->get_str();
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"constraint propagation solver for arithmetic constraints "
               "on integer intervals"};
  std::string bench_name, model_path, approach_name = "1a";
  std::string stats_json, schedule_name;
  bool all_mode = false, maximize_mode = false;
  unsigned long node_limit = 0;

  auto* bench_opt = app.add_option("--bench", bench_name,
                                   "built-in benchmark model");
  auto* model_opt =
      app.add_option("--model", model_path, "model file path");
  bench_opt->excludes(model_opt);
  app.add_option("--approach", approach_name,
                 "rewriting approach: 1a|1b|2a|2b|3a|3b|3c");
  auto* all_flag = app.add_flag("--all", all_mode, "enumerate all solutions");
  auto* max_flag =
      app.add_flag("--maximize", maximize_mode, "maximize the objective");
  all_flag->excludes(max_flag);
  app.add_option("--stats-json", stats_json, "write one stats record here");
  app.add_option("--node-limit", node_limit, "stop after this many nodes");
  app.add_option("--schedule", schedule_name,
                 "DRF scheduling: cycling|hierarchical");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  auto approach = approach_from_string(approach_name);
  if (!approach) {
    err << "invalid approach '" << approach_name << "'\n";
    return 1;
  }
  if (bench_name.empty() && model_path.empty()) {
    err << "one of --bench or --model is required\n";
    return 1;
  }

  std::string source, display_name;
  if (!bench_name.empty()) {
    auto def = find_benchmark(bench_name);
    if (!def) {
      err << "unknown benchmark '" << bench_name << "'\n";
      return 1;
    }
    source = def->source;
    display_name = def->name;
  } else {
    std::ifstream in(model_path);
    if (!in) {
      err << "cannot open model file '" << model_path << "'\n";
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    source = buf.str();
    display_name = model_path;
  }

  CspModel model;
  try {
    model = parse_model(source);
  } catch (const ParseError& e) {
    err << display_name << ": " << e.what() << "\n";
    return 2;
  }

  SearchConfig config;
  if (maximize_mode) {
    if (!model.objective) {
      err << "--maximize requires a model with a maximize statement\n";
      return 1;
    }
    config.mode = SearchConfig::Mode::Maximize;
  } else {
    config.mode = SearchConfig::Mode::AllSolutions;
  }
  if (node_limit > 0) config.node_limit = node_limit;
  if (schedule_name.empty()) {
    config.schedule = schedule_default_hierarchical(*approach)
                          ? ScheduleMode::Hierarchical
                          : ScheduleMode::Cycling;
  } else if (schedule_name == "cycling") {
    config.schedule = ScheduleMode::Cycling;
  } else if (schedule_name == "hierarchical") {
    config.schedule = ScheduleMode::Hierarchical;
  } else {
    err << "invalid schedule '" << schedule_name << "'\n";
    return 1;
  }

  CompiledCsp csp = compile(model, *approach,
                            config.mode == SearchConfig::Mode::Maximize);
  SearchOutcome outcome;
  try {
    outcome = solve_compiled(csp, model, config);
  } catch (const UnboundedVariableError& e) {
    err << e.what() << "\n";
    return 3;
  }

  StatsRow row;
  row.benchmark = display_name;
  row.approach = approach_str(*approach);
  row.nvar = csp.var_count();
  row.ndrf = csp.counted_drfs();
  row.nodes = outcome.stats.nodes;
  row.activated = outcome.stats.activations;
  row.effective_pct = outcome.stats.effective_pct();
  row.elapsed = outcome.stats.elapsed_seconds;
  row.ops = outcome.stats.ops;
  row.solutions = outcome.solutions.size();
  row.best = outcome.best_objective;
  row.truncated = outcome.truncated;

  out << stats_header() << "\n" << format_row(row) << "\n";
  if (config.mode == SearchConfig::Mode::Maximize) {
    if (outcome.best_solution) {
      out << "best objective: " << outcome.best_objective->get_str() << "\n";
      out << "solution:";
      for (size_t i = 0; i < model.vars.size(); ++i)
        out << " " << model.vars[i].name << "="
            << (*outcome.best_solution)[i].get_str();
      out << "\n";
    } else {
      out << "no solution\n";
    }
  } else {
    out << "solutions: " << outcome.solutions.size() << "\n";
    for (const auto& s : outcome.solutions) {
      out << " ";
      for (size_t i = 0; i < model.vars.size(); ++i)
        out << " " << model.vars[i].name << "=" << s[i].get_str();
      out << "\n";
    }
  }
  if (!stats_json.empty()) write_stats_json(stats_json, row);
  return 0;
}

}  // namespace intprop
