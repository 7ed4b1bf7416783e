#pragma once

#include <string>
#include <vector>

namespace chronos::selftest {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// Invariant checks on the built-in fixtures. Output is deterministic.
std::vector<CheckResult> run_all();

}  // namespace chronos::selftest
