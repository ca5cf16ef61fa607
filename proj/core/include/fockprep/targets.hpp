#pragma once

#include <vector>

#include "fockprep/fock.hpp"

namespace fockprep {

/// Normalized target superposition psi_0..psi_N with psi_N != 0.
/// Build through make_target / phase_state so the invariants hold.
struct TargetState {
    std::vector<Complex> psi;

    int degree() const { return static_cast<int>(psi.size()) - 1; }
    FockVector to_fock() const { return FockVector{psi}; }
};

/// Truncated coherent phase state parameters: |z;N> = C(z;N) sum_n z^n |n>.
struct PhaseStateSpec {
    Complex z;
    int n = 0;
};

/// Strips trailing zero coefficients, normalizes to unit norm, preserves
/// relative phases. Throws AllZero when every coefficient is zero.
TargetState make_target(std::vector<Complex> coeffs);

/// psi_n = C(z;N) z^n with C = sqrt((1-|z|^2)/(1-|z|^{2(N+1)})) for |z| < 1
/// and 1/sqrt(N+1) for |z| = 1. Rejects |z| > 1.
TargetState phase_state(const PhaseStateSpec& spec);

} // namespace fockprep
