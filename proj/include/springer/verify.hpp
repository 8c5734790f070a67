#pragma once

#include <string>
#include <vector>

namespace springer {

struct ClaimResult {
    std::string id;      // suite-qualified claim name
    std::string detail;  // identity checked plus case counts
    bool pass = true;
    bool informational = false;  // notes that never fail a run
};

struct VerificationReport {
    std::string suite;
    std::vector<ClaimResult> claims;
    bool all_pass() const;
};

// suite: all | bijection | alpha | series | triangles | dyck | levelcodes.
// A negative max_n selects the defaults (8 for exhaustive claims, 12 for
// series claims); otherwise it bounds both.
VerificationReport run_verification(const std::string& suite, int max_n = -1);

// One line per claim: PASS/FAIL/INFO, id, detail.
std::string format_report(const VerificationReport& report);

}  // namespace springer
