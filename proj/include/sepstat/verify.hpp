#pragma once

#include <string>
#include <vector>

#include "sepstat/enumerate.hpp"

namespace sepstat {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct SuiteReport {
    int n_max = 0;
    std::vector<CheckResult> checks;
    VerificationReport gf;

    bool passed() const;
};

/// Runs the generating-function comparison plus the invariant suite
/// (totals, vertical/horizontal symmetry, maximal separator counts,
/// expectation formulas, separator-free dual oracle, series identities)
/// for every n <= n_max.
SuiteReport run_verification_suite(int n_max, const SweepOptions& options = {});

}  // namespace sepstat
