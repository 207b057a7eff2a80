#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jl::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 a requested structural check found violations, 2 parse or input errors,
// 3 violated hypotheses, 4 internal invariant failures or failed --check suites.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jl::cli
