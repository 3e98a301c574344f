#pragma once

#include <stdexcept>

namespace mvd {

// A lambda parameter hit a value excluded by the canonical-block side
// conditions (lambda = 0 or lambda = (-1)^(m+1) for an H block).
struct InvalidLambda : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The linear system has no solution at the requested tolerance.
struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// T(A) + D(C) does not span the full matrix space, so no F_ij exist for the
// off-pattern directions.
struct NotSpanning : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The direct-sum precondition of a pattern projection failed.
struct NotTransversal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mvd
