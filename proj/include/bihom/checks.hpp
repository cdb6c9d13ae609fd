#pragma once

// Pass/fail results for identities checked over basis elements.

#include "bihom/matrix.hpp"

#include <string>
#include <vector>

namespace bihom {

struct Violation {
    std::string condition;            // e.g. "ψα = αψ", "ψ(x⊣y) = ψ(x)⊣'ψ(y)"
    std::vector<std::size_t> basis;   // 0-based basis indices the condition was evaluated on
    Vector lhs;
    Vector rhs;
};

struct CheckReport {
    std::vector<Violation> violations;

    bool holds() const { return violations.empty(); }
    explicit operator bool() const { return holds(); }

    void add(std::string condition, std::vector<std::size_t> basis, Vector lhs, Vector rhs) {
        violations.push_back({std::move(condition), std::move(basis), std::move(lhs), std::move(rhs)});
    }
    // Records a violation when the sides differ.
    void expect_equal(const std::string& condition, std::vector<std::size_t> basis, Vector lhs, Vector rhs) {
        if (lhs != rhs) add(condition, std::move(basis), std::move(lhs), std::move(rhs));
    }
    void append(const CheckReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

}  // namespace bihom
