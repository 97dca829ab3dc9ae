#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fuzzy {

struct VerifyOptions {
    int max_n = 32;
    /// Test hook: relative error injected into kappa when solving for (alpha, beta).
    /// Any nonzero value must make the projector suite fail.
    double kappa_perturbation = 0.0;
    std::uint64_t seed = 0x5eed2001;
};

struct SuiteResult {
    std::string name;
    bool passed;
    std::string detail;  // worst residual, or the first failing case
};

/// Runs every invariant suite at the given sizes.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace fuzzy
