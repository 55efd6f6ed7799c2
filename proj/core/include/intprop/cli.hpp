// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intprop {

// Command-line front end. Exit codes: 0 success (including inconsistent
// models), 1 invalid arguments, 2 model parse error, 3 unbounded branching
// variable.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace intprop
