#pragma once

#include "soweyl/lemma.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace soweyl::cli {

// Exit codes: 0 success, 1 usage or validation error, 2 equivalence
// counterexample found, 3 enumeration ceiling or instance budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitBudget = 3;

int sweep_exit_code(const SweepReport& report);

// Full command driver; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soweyl::cli
