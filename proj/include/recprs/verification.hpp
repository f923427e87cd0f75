#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "recprs/polynomial.hpp"

namespace recprs {

/// One checked identity lhs == rhs. `factor` is the scalar multiplying the
/// reference polynomial on the right-hand side, when there is one.
struct ClaimCheck {
    std::string claim;
    int k = 1;
    int j = 0;
    Polynomial lhs;
    Polynomial rhs;
    std::optional<Rational> factor;
    bool pass = false;
};

/// Verification results are plain data so callers can print counterexamples.
struct VerificationReport {
    std::string subject;
    std::vector<ClaimCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [](const ClaimCheck& c) { return !c.pass; }));
    }
    void append(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

}  // namespace recprs
