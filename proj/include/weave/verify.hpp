#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weave {

struct VerifyOptions {
    std::uint64_t seed = 1;
    bool long_tests = false;
};

// Outcome of one numbered reproduction check.
struct CheckResult {
    int criterion = 0;
    std::string title;
    bool ok = false;
    std::vector<std::string> failures;  // empty when ok
    std::string summary;
    double seconds = 0;
};

constexpr int kNumCriteria = 11;

CheckResult run_criterion(int id, const VerifyOptions& opt);

// Criteria behind a suite name: tables, coxeter, folding, ngraph,
// equivariance, properties, all.
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace weave
