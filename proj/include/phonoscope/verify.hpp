#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace phonoscope {

/// One named invariant check: measured value against its threshold.
struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct VerifyOptions {
    bool quick = false;
    std::uint64_t seed = 12345;
    int workers = 1;
};

/// Runs the cross-module invariant suite. Deterministic for a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// CSV payload of the results (no timings, byte-stable for fixed inputs).
std::string verify_report_csv(const std::vector<CheckResult>& results);

}  // namespace phonoscope
