#pragma once

#include "rsweight/json_io.hpp"

#include <string>
#include <vector>

namespace rsw {

/// Cross-validation sweeps.  Each suite compares independent evaluation
/// routes over a fixed grid of cells and records one human-readable
/// mismatch line per disagreement; a suite passes when no cell disagrees.
/// The thirteen suites correspond one-to-one to the acceptance checks and
/// are run together by the acceptance binary.
struct VerifyOptions {
    Budget budget = Budget::from_env();
    int partitions = 4;          // chunk count for the determinism sweep
    std::uint64_t max_q = 0;     // 0 = full grid; else drop rows with larger fields
    bool inject_defect = false;  // flip one known cell to prove mismatches are caught
};

struct SuiteResult {
    std::string suite;
    std::uint64_t cells = 0;
    std::vector<std::string> mismatches;
    bool pass() const { return mismatches.empty(); }
};

// Criterion order.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const VerifyOptions& options);
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

Json suite_result_json(const SuiteResult& result);

}   // namespace rsw
