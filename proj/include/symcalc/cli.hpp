#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symcalc {

// Exit codes: 0 success, 1 verification failure (a counterexample was
// found), 2 usage or input error, 3 size cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcalc
