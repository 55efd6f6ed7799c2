// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "intprop/expr.hpp"

namespace intprop {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Model text format, one ';'-terminated statement per line:
//   var <name> in [<int>..<int>];
//   var <name> in Z;
//   <expr> <relop> <expr>;          relop: < <= = != >= >
//   maximize <expr>;
// Expressions use + - * ^ with parentheses; integers are arbitrary
// precision decimal literals. Variable order is declaration order.
CspModel parse_model(std::string_view text);

}  // namespace intprop
