#pragma once

#include <string>
#include <vector>

#include "arimat/realization.hpp"

namespace arimat {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // reason on failure, or why a check was vacuous
};

struct VerifyOptions {
    // test hook: drop one cover from the built poset before the poset
    // checks run, to prove the checks can fail
    bool corrupt_cover = false;
};

// Deterministic identity suite over one realization. Checks, in order:
// simplicial-components, component-count, component-isomorphism,
// rank-counts, cover-counts, boolean-intervals, chain-oracle,
// main-theorem, main-theorem-dual-route, duality-involution,
// point-decomposition, gt-evaluation. Conditional checks pass vacuously
// with a detail note when their precondition fails.
std::vector<CheckResult> run_verification(const Realization& r, const VerifyOptions& opts = {});

} // namespace arimat
