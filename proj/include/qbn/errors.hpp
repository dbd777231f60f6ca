#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qbn {

struct IndexError : std::runtime_error {
    explicit IndexError(const std::string& what) : std::runtime_error(what) {}
};

/// A skew bracket was requested with an inadmissible factor: the left factor
/// must be homogeneous with respect to the character grading, the right one
/// with respect to the group grading.
struct HomogeneityError : std::runtime_error {
    std::string side;
    explicit HomogeneityError(std::string which)
        : std::runtime_error("bracket factor not homogeneous: " + which), side(std::move(which)) {}
};

struct ZeroElementError : std::runtime_error {
    ZeroElementError() : std::runtime_error("zero element has no degree") {}
};

struct MixedSignError : std::runtime_error {
    explicit MixedSignError(const std::string& what) : std::runtime_error(what) {}
};

struct StyleNotApplicable : std::runtime_error {
    explicit StyleNotApplicable(const std::string& what) : std::runtime_error(what) {}
};

struct NotRegularError : std::runtime_error {
    explicit NotRegularError(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeBudgetExceeded : std::runtime_error {
    std::vector<int> multidegree;
    explicit DegreeBudgetExceeded(std::vector<int> d)
        : std::runtime_error("multidegree exceeds the configured budget"), multidegree(std::move(d)) {}
};

}  // namespace qbn
