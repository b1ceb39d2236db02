#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycdes/tableaux.hpp"

namespace cycdes {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on success, first counterexample otherwise
};

// Named check suites runnable from the command line.  Every check scans
// exhaustively up to the size cap and reports the first counterexample.
std::vector<std::string> suite_names();  // all, theorem1, theorem2, prop25, gens, exceptional, gw

std::vector<CheckResult> run_suite(const std::string& suite, int max_n,
                                   std::int64_t limit = kDefaultSytLimit);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cycdes
