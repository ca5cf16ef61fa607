#include "fockprep/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace fockprep {

FockVector apply_Y(const FockVector& s, const BeamSplitter& bs, int max_cutoff) {
    FockVector out = apply_creation(apply_number_scaling(s, bs.t), max_cutoff);
    for (Complex& a : out.amps) a *= bs.r;
    return out;
}

SimOutcome run_cascade(const std::vector<Complex>& alphas,
                       const std::vector<BeamSplitter>& stages,
                       const TruncationPolicy& policy, const FockVector* reference) {
    if (alphas.size() != stages.size() + 1)
        throw std::invalid_argument("run_cascade: need one alpha per stage plus the final one");
    SimOutcome out;
    FockVector state = FockVector::vacuum();
    double log_total = 0.0;
    int cutoff_used = 0;
    for (size_t k = 0; k < stages.size(); ++k) {
        state = displace(state, alphas[k], policy);
        cutoff_used = std::max(cutoff_used, state.cutoff());
        state = trim_tail(state, policy.tail_tol, policy.min_cutoff);
        state = apply_Y(state, stages[k], policy.max_cutoff);
        const double rho2 = norm_sq(state);
        if (!(rho2 > 0.0)) throw ZeroNorm("run_cascade: stage norm vanished");
        log_total += std::log(rho2);
        if (log_total < std::log(1e-300))
            throw ZeroNorm("run_cascade: cumulative norm underflows");
        out.stage_norms_sq.push_back(std::exp(log_total));
        const double inv = 1.0 / std::sqrt(rho2);
        for (Complex& a : state.amps) a *= inv;
    }
    state = displace(state, alphas.back(), policy);
    cutoff_used = std::max(cutoff_used, state.cutoff());
    state = trim_tail(state, policy.tail_tol, policy.min_cutoff);
    const double n = norm(state);
    for (Complex& a : state.amps) a /= n;
    out.final_state = std::move(state);
    out.total_prob = stages.empty() ? 1.0 : out.stage_norms_sq.back();
    out.cutoff_used = cutoff_used;
    if (reference != nullptr)
        out.fidelity_with_target = fidelity(out.final_state, *reference);
    return out;
}

SimOutcome run_plan(const SynthesisPlan& plan, const TruncationPolicy& policy) {
    const std::vector<BeamSplitter> stages(static_cast<size_t>(plan.stages()), plan.bs);
    const FockVector target = plan.target.to_fock();
    return run_cascade(plan.alphas, stages, policy, &target);
}

double verify_commutation_identity(Complex alpha, Complex t, int dim) {
    if (dim < 4) throw std::invalid_argument("verify_commutation_identity: dim too small");
    if (t == Complex(0.0))
        throw std::invalid_argument("verify_commutation_identity: t must be nonzero");
    const int max_cut = dim - 1;

    ComplexMatrix creation(dim, dim);
    for (int n = 0; n + 1 < dim; ++n)
        creation(n + 1, n) = std::sqrt(static_cast<double>(n + 1));

    const ComplexMatrix d_alpha = displacement_matrix(alpha, dim, max_cut);
    ComplexMatrix t_num(dim, dim);
    Complex tn = 1.0;
    for (int n = 0; n < dim; ++n) {
        t_num(n, n) = tn;
        tn *= t;
    }
    const ComplexMatrix conjugated = d_alpha.adjoint() * t_num * d_alpha;
    const ComplexMatrix lhs = conjugated * creation;

    const Complex t_bar = 1.0 - 1.0 / t;
    const ComplexMatrix d_mu = displacement_matrix(std::conj(t_bar) * alpha, dim, max_cut);
    ComplexMatrix rhs = (d_mu.adjoint() * creation * d_mu) * conjugated;

    const int block = dim - dim / 2;
    double worst = 0.0;
    for (int i = 0; i < block; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < block; ++j) row_sum += std::abs(lhs(i, j) - t * rhs(i, j));
        worst = std::max(worst, row_sum);
    }
    return worst;
}

} // namespace fockprep
