#pragma once

#include <string>
#include <vector>

#include "qsa/group_extension.hpp"

namespace qsa {

struct Bounds {
    int degree_cap = 4;
    int max_p = 3;
    int max_entry_degree = 2;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string counterexample;
};

struct VerifySetup {
    Ctx ctx;
    GCtx grp; // may be null: no group configured
    Bounds bounds;
};

/// Known suites: koszul | homotopy | chainmaps | bracket | skew | all.
/// Throws std::invalid_argument for unknown names or for "skew" without a
/// configured group. `workers` > 1 runs independent checks concurrently.
std::vector<CheckResult> run_suite(const VerifySetup& setup, const std::string& suite,
                                   int workers);

} // namespace qsa
