#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rayleigh::cli {

// Runs one command given main-style arguments, program name excluded.
// Exit codes: 0 success or HOLDS/CERTIFIED, 1 VIOLATED, 2 inconclusive
// (NO_VIOLATION_FOUND), 3 usage or input errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace rayleigh::cli
