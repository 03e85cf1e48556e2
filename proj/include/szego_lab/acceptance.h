#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace szego {

/// One named numerical check. pass means residual <= tolerance; residuals are
/// nonnegative, so a negative tolerance can never pass.
struct CheckResult {
    std::string name;
    int criterion;
    double residual;
    double tolerance;
    bool pass;
    std::string detail;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20240611;
    /// run only checks whose name contains this substring; empty runs all
    std::string only;
    /// harness self-test: every tolerance is replaced by -1
    bool corrupt_tolerances = false;
};

/// Names of all checks in execution order.
std::vector<std::string_view> acceptance_check_names();

/// Short title of each of the 12 criteria, index 1..12.
std::string_view criterion_title(int criterion);

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options = {});

} // namespace szego
