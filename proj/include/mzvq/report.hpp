#pragma once

#include <string>
#include <vector>

namespace mzvq {

/// One verified identity instance. Exact checks pass only with an exactly
/// zero residual; numeric checks pass when |residual| <= err + tolerance.
struct VerificationReport {
    std::string name;      // identity label, e.g. "euler-product"
    std::string instance;  // parameter tuple, e.g. "n=12"
    std::string mode;      // "exact" or "numeric"
    bool passed = false;
    std::string residual;   // exact: rational text; numeric: decimal of the residual
    std::string err_bound;  // numeric mode only

    static VerificationReport exact(std::string name, std::string instance, bool passed,
                                    std::string residual_text) {
        return {std::move(name), std::move(instance), "exact", passed,
                std::move(residual_text), ""};
    }
};

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

}  // namespace mzvq
