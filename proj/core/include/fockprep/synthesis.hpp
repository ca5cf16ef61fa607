#pragma once

#include <vector>

#include "fockprep/math_kernel.hpp"
#include "fockprep/targets.hpp"

namespace fockprep {

/// Beam splitter amplitudes with |T|^2 + |R|^2 = 1 and 0 < |T| < 1.
struct BeamSplitter {
    Complex t;
    Complex r;

    BeamSplitter(Complex transmittance, Complex reflectance);

    /// R chosen real nonnegative; R carries no observable phase here.
    static BeamSplitter from_transmittance(Complex transmittance);
};

/// The compiled program: ordered roots (stored as beta, not beta*), the
/// experimental displacement parameters alpha_1..alpha_{N+1}, and the beam
/// splitter shared by all N photon-add stages.
struct SynthesisPlan {
    TargetState target;
    BeamSplitter bs;
    std::vector<Complex> betas;
    std::vector<Complex> alphas;
    std::vector<int> root_order; // permutation applied to canonical order, 0-based

    int stages() const { return static_cast<int>(betas.size()); }
};

/// Local-oscillator settings realizing each alpha_k = R~ * alpha_{L_k} at an
/// almost transparent displacement beam splitter.
struct LOSettings {
    Complex r_tilde;
    std::vector<Complex> alphas_lo;
};

/// Characteristic polynomial of the target: coefficient n is psi_n / sqrt(n!).
/// Its roots are the beta* values. Throws DegreeZero for a vacuum-like target.
Polynomial characteristic_coeffs(const TargetState& t);

/// Full compilation: roots (canonical order, optionally permuted), betas,
/// and the displacement parameters
///   alpha_{N+1} = beta_N,
///   alpha_k     = conj(T)^{N-k+1} (beta_{k-1} - beta_k),   k = 2..N,
///   alpha_1     = -sum_{l=1..N} T^{-l} alpha_{l+1}.
/// A degree-0 target compiles to an empty plan with alphas = {0}.
SynthesisPlan compile(const TargetState& t, const BeamSplitter& bs,
                      const std::vector<int>& order = {});

/// Same mapping for an already-ordered beta sequence (no root solve). Used by
/// sweeps and optimizers that re-plan the same target at many transmittances.
SynthesisPlan compile_with_betas(const TargetState& t, const BeamSplitter& bs,
                                 const std::vector<Complex>& betas,
                                 const std::vector<int>& order = {});

/// Displacement parameters when photon-add stage k has its own transmittance
/// ts[k-1]; with Q_k = prod_{r=k..N} T_r this is
///   alpha_{N+1} = beta_N,
///   alpha_k     = conj(Q_k) (beta_{k-1} - beta_k),          k = 2..N,
///   alpha_1     = -(beta_N + sum_{j=2..N} Q_j alpha_j) / Q_1.
/// Reduces to the common-T mapping when all ts are equal.
std::vector<Complex> stagewise_alphas(const std::vector<Complex>& betas,
                                      const std::vector<Complex>& ts);

/// Expands prod_k (a+ - beta_k*) |0> in the Fock basis and returns its
/// fidelity with the target. Contract: >= 1 - 1e-9 for betas from compile.
double verify_factorization(const TargetState& t, const std::vector<Complex>& betas);

/// alpha_{L_k} = alpha_k / R~ for every displacement stage.
LOSettings lo_settings(const SynthesisPlan& plan, Complex r_tilde);

} // namespace fockprep
