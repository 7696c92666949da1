#pragma once

#include <string>
#include <vector>

namespace qfa {

/// One violated machine invariant: which component, what went wrong, and
/// the measured defect (0 when the defect is structural rather than numeric).
struct Violation {
    std::string component;
    std::string message;
    double defect = 0.0;
};

}  // namespace qfa
