#pragma once

#include <vector>

#include "fockprep/probability.hpp"
#include "fockprep/synthesis.hpp"

namespace fockprep {

/// Result of executing a conditional-measurement cascade on truncated Fock
/// vectors. stage_norms_sq[k-1] is the cumulative P_k^2 after the k-th
/// photon-add stage; total_prob equals the last entry.
struct SimOutcome {
    FockVector final_state;
    std::vector<double> stage_norms_sq;
    double total_prob = 1.0;
    double fidelity_with_target = 1.0;
    int cutoff_used = 0;
};

/// Conditional photon-add map Y = R a+ T^n (zero photons seen at the monitor).
FockVector apply_Y(const FockVector& s, const BeamSplitter& bs,
                   int max_cutoff = TruncationPolicy{}.max_cutoff);

/// Runs displace(alpha_k) then Y for k = 1..N (stage k using stages[k-1]),
/// then the final displace(alpha_{N+1}). Norm factors accumulate in log space;
/// a cumulative norm below 1e-300 raises ZeroNorm. When reference is given,
/// its fidelity with the normalized final state is reported.
SimOutcome run_cascade(const std::vector<Complex>& alphas,
                       const std::vector<BeamSplitter>& stages,
                       const TruncationPolicy& policy = {},
                       const FockVector* reference = nullptr);

/// run_cascade for a compiled plan; fidelity is taken against the plan target.
SimOutcome run_plan(const SynthesisPlan& plan, const TruncationPolicy& policy = {});

/// Residual of the operator identity
///   [D+(a) T^n D(a)] a+  =  T D+(Tb* a) a+ D(Tb* a) [D+(a) T^n D(a)],
/// Tb = 1 - 1/T, evaluated as dim x dim matrices and measured by the max row
/// sum of the difference on the truncation-safe lower (dim/2) block.
double verify_commutation_identity(Complex alpha, Complex t, int dim);

} // namespace fockprep
