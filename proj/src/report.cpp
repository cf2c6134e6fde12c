#include "homolab/report.hpp"

#include <algorithm>

namespace homolab {

bool VerificationReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::add(const std::string& name, bool pass, const std::string& detail)
{
    checks.push_back({name, pass, detail});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix)
{
    for (const CheckResult& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
}

}  // namespace homolab
