#include "fockprep/synthesis.hpp"

#include <algorithm>
#include <cmath>

namespace fockprep {

BeamSplitter::BeamSplitter(Complex transmittance, Complex reflectance)
    : t(transmittance), r(reflectance) {
    const double at = std::abs(t);
    if (!(at > 0.0 && at < 1.0))
        throw std::invalid_argument("BeamSplitter: |T| must lie in (0, 1)");
    if (std::abs(std::norm(t) + std::norm(r) - 1.0) > 1e-12)
        throw std::invalid_argument("BeamSplitter: |T|^2 + |R|^2 must equal 1");
}

BeamSplitter BeamSplitter::from_transmittance(Complex transmittance) {
    const double at2 = std::norm(transmittance);
    if (!(at2 > 0.0 && at2 < 1.0))
        throw std::invalid_argument("BeamSplitter: |T| must lie in (0, 1)");
    return BeamSplitter(transmittance, std::sqrt(1.0 - at2));
}

Polynomial characteristic_coeffs(const TargetState& t) {
    const int n = t.degree();
    if (n < 1) throw DegreeZero("characteristic_coeffs: degree-0 target");
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    double sqrt_fact = 1.0;
    c[0] = t.psi[0];
    for (int k = 1; k <= n; ++k) {
        sqrt_fact *= std::sqrt(static_cast<double>(k));
        c[k] = t.psi[k] / sqrt_fact;
    }
    return Polynomial(std::move(c));
}

namespace {

std::vector<int> resolve_order(const std::vector<int>& order, int n) {
    if (order.empty()) {
        std::vector<int> identity(n);
        for (int i = 0; i < n; ++i) identity[i] = i;
        return identity;
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("root order: wrong length");
    std::vector<bool> seen(n, false);
    for (int idx : order) {
        if (idx < 0 || idx >= n || seen[idx])
            throw std::invalid_argument("root order: not a permutation");
        seen[idx] = true;
    }
    return order;
}

} // namespace

SynthesisPlan compile_with_betas(const TargetState& t, const BeamSplitter& bs,
                                 const std::vector<Complex>& betas,
                                 const std::vector<int>& order) {
    const int n = static_cast<int>(betas.size());
    std::vector<Complex> alphas(static_cast<size_t>(n) + 1, Complex(0.0));
    if (n > 0) {
        alphas[n] = betas[n - 1];
        const Complex tc = std::conj(bs.t);
        for (int k = 2; k <= n; ++k)
            alphas[k - 1] = std::pow(tc, n - k + 1) * (betas[k - 2] - betas[k - 1]);
        Complex acc = 0.0;
        Complex t_inv_l = 1.0;
        for (int l = 1; l <= n; ++l) {
            t_inv_l /= bs.t;
            acc += t_inv_l * alphas[l];
        }
        alphas[0] = -acc;
    }
    return SynthesisPlan{t, bs, betas, std::move(alphas), order};
}

SynthesisPlan compile(const TargetState& t, const BeamSplitter& bs,
                      const std::vector<int>& order) {
    if (t.degree() == 0)
        return SynthesisPlan{t, bs, {}, {Complex(0.0)}, {}};
    const std::vector<Complex> roots = find_roots(characteristic_coeffs(t));
    const std::vector<int> perm = resolve_order(order, static_cast<int>(roots.size()));
    std::vector<Complex> betas(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) betas[i] = std::conj(roots[perm[i]]);
    return compile_with_betas(t, bs, betas, perm);
}

std::vector<Complex> stagewise_alphas(const std::vector<Complex>& betas,
                                      const std::vector<Complex>& ts) {
    const int n = static_cast<int>(betas.size());
    if (static_cast<int>(ts.size()) != n)
        throw std::invalid_argument("stagewise_alphas: one transmittance per stage");
    std::vector<Complex> alphas(static_cast<size_t>(n) + 1, Complex(0.0));
    if (n == 0) return alphas;
    // Q[k-1] = prod_{r=k..N} T_r
    std::vector<Complex> q(static_cast<size_t>(n) + 1, Complex(1.0));
    for (int k = n - 1; k >= 0; --k) q[k] = q[k + 1] * ts[k];
    alphas[n] = betas[n - 1];
    for (int k = 2; k <= n; ++k)
        alphas[k - 1] = std::conj(q[k - 1]) * (betas[k - 2] - betas[k - 1]);
    Complex acc = betas[n - 1];
    for (int j = 2; j <= n; ++j) acc += q[j - 1] * alphas[j - 1];
    alphas[0] = -acc / q[0];
    return alphas;
}

double verify_factorization(const TargetState& t, const std::vector<Complex>& betas) {
    if (static_cast<int>(betas.size()) != t.degree())
        throw std::invalid_argument("verify_factorization: need one beta per degree");
    std::vector<Complex> roots(betas.size());
    for (size_t i = 0; i < betas.size(); ++i) roots[i] = std::conj(betas[i]);
    const Polynomial p = poly_from_roots(roots, Complex(1.0));
    // coefficient of (a+)^n picks up sqrt(n!) on |n>
    FockVector expansion;
    expansion.amps.resize(p.coeffs().size());
    double sqrt_fact = 1.0;
    expansion.amps[0] = p.coeffs()[0];
    for (size_t n = 1; n < expansion.amps.size(); ++n) {
        sqrt_fact *= std::sqrt(static_cast<double>(n));
        expansion.amps[n] = p.coeffs()[n] * sqrt_fact;
    }
    return fidelity(expansion, t.to_fock());
}

LOSettings lo_settings(const SynthesisPlan& plan, Complex r_tilde) {
    const double ar = std::abs(r_tilde);
    if (!(ar > 0.0 && ar < 1.0))
        throw std::invalid_argument("lo_settings: |R~| must lie in (0, 1)");
    LOSettings lo{r_tilde, {}};
    lo.alphas_lo.reserve(plan.alphas.size());
    for (const Complex& a : plan.alphas) lo.alphas_lo.push_back(a / r_tilde);
    return lo;
}

} // namespace fockprep
