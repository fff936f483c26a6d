#pragma once

#include "g2deg/catalog.hpp"

#include <string>
#include <vector>

namespace g2deg {

struct ConformanceCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // first mismatch on failure
};

/// Compares solver output for a catalog case against the closed-form
/// coefficient and boundary expressions known for that case.
std::vector<ConformanceCheck> closed_form_checks(CaseId id, const CaseParams& params);

}  // namespace g2deg
