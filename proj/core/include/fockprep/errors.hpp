#pragma once

#include <stdexcept>
#include <string>

namespace fockprep {

/// Truncated Fock space would have to grow past TruncationPolicy::max_cutoff.
struct CutoffExceeded : std::runtime_error {
    explicit CutoffExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// Root iteration exhausted its sweep budget (ill-conditioned polynomial).
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

/// A state norm (or success probability) underflowed below anything representable.
struct ZeroNorm : std::runtime_error {
    explicit ZeroNorm(const std::string& msg) : std::runtime_error(msg) {}
};

/// An assembled closed-form value violates a structural guarantee (nonpositive
/// or complex where it must be positive real); signals a fault upstream.
struct NumericalInconsistency : std::runtime_error {
    explicit NumericalInconsistency(const std::string& msg) : std::runtime_error(msg) {}
};

/// Every coefficient of a would-be target state is zero.
struct AllZero : std::invalid_argument {
    explicit AllZero(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Operation requires at least one photon addition (degree >= 1).
struct DegreeZero : std::invalid_argument {
    explicit DegreeZero(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A stagewise configuration never produced the target state.
struct ValidationFailure : std::runtime_error {
    explicit ValidationFailure(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fockprep
