#pragma once

#include <stdexcept>
#include <string>

namespace hamming {

// Bad user-supplied data (malformed diagram, out-of-range parameter, ...).
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact search ran out of its node budget. Carries the best bounds found
// so far, so callers can still report a bracket.
struct budget_exceeded : std::runtime_error {
    long long best_lower = 0;
    long long best_upper = -1;
    budget_exceeded(const std::string& what, long long lower, long long upper)
        : std::runtime_error(what), best_lower(lower), best_upper(upper) {}
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A simulation would exceed a configured resource cap (memory, retries).
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hamming
