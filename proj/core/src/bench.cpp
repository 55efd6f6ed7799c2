// SPDX-License-Identifier: Apache-2.0
#include "intprop/bench.hpp"

#include <iomanip>
#include <sstream>

namespace intprop {

namespace {

// All-different as pairwise disequalities.
std::string pairwise_diseq(const std::vector<std::string>& vars) {
  std::string s;
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      s += vars[i] + " != " + vars[j] + ";\n";
  return s;
}

std::string cubes_source() {
  return
      "# all n <= 1000 that are a sum of four different cubes\n"
      "var x1 in Z;\n"
      "var x2 in Z;\n"
      "var x3 in Z;\n"
      "var x4 in Z;\n"
      "var n in [1..1000];\n"
      "1 <= x1;\n"
      "x1 <= x2 - 1;\n"
      "x2 <= x3 - 1;\n"
      "x3 <= x4 - 1;\n"
      "x4 <= n;\n"
      "x1^3 + x2^3 + x3^3 + x4^3 = n;\n";
}

std::string fractions1_source() {
  std::string s =
      "# A/BC + D/EF + G/HI = 1 with distinct nonzero digits, denominators\n"
      "# cleared; ordering and redundant constraints likewise multiplied out\n";
  for (const char* v : {"A", "B", "C", "D", "E", "F", "G", "H", "I"})
    s += std::string("var ") + v + " in [1..9];\n";
  s +=
      "A*(10*E + F)*(10*H + I) + D*(10*B + C)*(10*H + I)"
      " + G*(10*B + C)*(10*E + F) = (10*B + C)*(10*E + F)*(10*H + I);\n"
      "A*(10*E + F) >= D*(10*B + C);\n"
      "D*(10*H + I) >= G*(10*E + F);\n"
      "3*A >= 10*B + C;\n"
      "3*G <= 10*H + I;\n";
  s += pairwise_diseq({"A", "B", "C", "D", "E", "F", "G", "H", "I"});
  return s;
}

std::string fractions2_source() {
  std::string s =
      "# fractions with auxiliary two-digit variables BC, EF, HI\n";
  for (const char* v : {"A", "B", "C", "D", "E", "F", "G", "H", "I"})
    s += std::string("var ") + v + " in [1..9];\n";
  s +=
      "var BC in [11..99];\n"
      "var EF in [11..99];\n"
      "var HI in [11..99];\n"
      "BC = 10*B + C;\n"
      "EF = 10*E + F;\n"
      "HI = 10*H + I;\n"
      "A*EF*HI + D*BC*HI + G*BC*EF = BC*EF*HI;\n"
      "A*EF >= D*BC;\n"
      "D*HI >= G*EF;\n"
      "3*A >= BC;\n"
      "3*G <= HI;\n";
  s += pairwise_diseq({"A", "B", "C", "D", "E", "F", "G", "H", "I"});
  return s;
}

std::string kyoto_source() {
  std::string s =
      "# KYOTO + KYOTO + KYOTO = TOKYO in some base b, searched over 2..100\n"
      "var b in [2..100];\n"
      "var T in [1..99];\n"
      "var O in [0..99];\n"
      "var K in [1..99];\n"
      "var Y in [0..99];\n"
      "K <= b - 1;\n"
      "Y <= b - 1;\n"
      "O <= b - 1;\n"
      "T <= b - 1;\n"
      "3*(K*b^4 + Y*b^3 + O*b^2 + T*b + O) ="
      " T*b^4 + O*b^3 + K*b^2 + Y*b + O;\n";
  s += pairwise_diseq({"K", "Y", "O", "T"});
  return s;
}

}  // namespace

std::string opt_model_source(const std::string& hi) {
  return
      "# maximize 2xy - z subject to x^3 + y^2 = z^3\n"
      "var x in [1.." + hi + "];\n"
      "var y in [1.." + hi + "];\n"
      "var z in [1.." + hi + "];\n"
      "x^3 + y^2 = z^3;\n"
      "maximize 2*x*y - z;\n";
}

std::vector<BenchmarkDef> builtin_models() {
  return {
      {"cubes", cubes_source()},
      {"opt", opt_model_source("100000")},
      {"fractions1", fractions1_source()},
      {"fractions2", fractions2_source()},
      {"kyoto", kyoto_source()},
  };
}

std::optional<BenchmarkDef> find_benchmark(const std::string& name) {
  for (auto& b : builtin_models())
    if (b.name == name) return b;
  return std::nullopt;
}

std::string stats_header() {
  std::ostringstream os;
  os << std::left << std::setw(12) << "benchmark" << std::setw(9) << "approach"
     << std::right << std::setw(6) << "nvar" << std::setw(6) << "nDRF"
     << std::setw(10) << "nodes" << std::setw(12) << "activated"
     << std::setw(12) << "%effective" << std::setw(10) << "elapsed";
  return os.str();
}

std::string format_row(const StatsRow& row) {
  std::ostringstream os;
  os << std::left << std::setw(12) << row.benchmark << std::setw(9)
     << row.approach << std::right << std::setw(6) << row.nvar << std::setw(6)
     << row.ndrf << std::setw(10) << row.nodes << std::setw(12)
     << row.activated << std::setw(12) << std::fixed << std::setprecision(2)
     << row.effective_pct << std::setw(10) << std::setprecision(3)
     << row.elapsed;
  if (row.truncated) os << "  (node limit)";
  os << "\n";
  os << "  ops: root=" << row.ops.root << " exp=" << row.ops.exp
     << " div=" << row.ops.div << " multI=" << row.ops.mult_i
     << " multF=" << row.ops.mult_f << " sum=" << row.ops.sum;
  if (row.ops.div_q || row.ops.sum_q)
    os << " divQ=" << row.ops.div_q << " sumQ=" << row.ops.sum_q;
  return os.str();
}

}  // namespace intprop
