#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frpr {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // measured quantities, one line
    double seconds = 0.0;
    std::uint64_t digest = 0;  // hash of every number the check computed
};

struct SelftestOptions {
    std::uint64_t seed = 20240601;
    unsigned threads = 1;  // criteria run concurrently; results do not depend on it
    std::vector<int> only;  // empty: all of 1..11
};

/// Runs the acceptance criteria. Criterion 11 reruns 1..10 and compares digests.
std::vector<CriterionResult> run_selftest(const SelftestOptions& opt = {});

/// "criterion  7 PASS  gaussian mixture recovery  (12.3 s)  node error 3e-9 ..."
std::string format_result(const CriterionResult& r);

}  // namespace frpr
