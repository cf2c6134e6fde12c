#pragma once

#include <string>
#include <vector>

namespace homolab {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Ordered list of named pass/fail checks.
struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
    void merge(const VerificationReport& other, const std::string& prefix = "");
};

}  // namespace homolab
