#include "fockprep/probability.hpp"

#include <cmath>

namespace fockprep {

namespace {

constexpr int kMaxStage = 30; // factorials stay trustworthy in double

void check_stage_index(const SynthesisPlan& plan, int k) {
    if (k < 1 || k > plan.stages())
        throw std::invalid_argument("stage index k out of range");
    if (k > kMaxStage)
        throw std::invalid_argument("stage index beyond the k <= 30 precision guard");
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Complex int_pow(Complex base, int exp) {
    Complex acc = 1.0;
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

} // namespace

Complex gamma_k(const SynthesisPlan& plan, int k) {
    check_stage_index(plan, k);
    Complex acc = 0.0;
    for (int j = 1; j <= k; ++j)
        acc += int_pow(plan.bs.t, k + 1 - j) * plan.alphas[j - 1];
    return acc;
}

std::vector<Complex> b_coefficients(const SynthesisPlan& plan, int k) {
    check_stage_index(plan, k);
    std::vector<Complex> b(static_cast<size_t>(k), Complex(0.0));
    const Complex t_conj_inv = 1.0 / std::conj(plan.bs.t);
    // b_{m+1,k} = b_{mk} - conj(T)^{-m} alpha_{k-m+1}
    Complex power = 1.0;
    for (int m = 2; m <= k; ++m) {
        power *= t_conj_inv;
        b[m - 1] = b[m - 2] - power * plan.alphas[k - m + 1];
    }
    return b;
}

Complex coherent_moment(Complex gamma, int k, int m, int l) {
    if (m < 0 || m > k || l < 0 || l > k)
        throw std::invalid_argument("coherent_moment: need 0 <= m,l <= k");
    const double g2 = std::norm(gamma);
    if (l < m)
        return factorial(k - m) * int_pow(std::conj(gamma), m - l) *
               laguerre(k - m, m - l, -g2);
    return factorial(k - l) * int_pow(gamma, l - m) * laguerre(k - l, l - m, -g2);
}

double stage_norm_sq(const SynthesisPlan& plan, int k) {
    check_stage_index(plan, k);
    const Complex t = plan.bs.t;
    const double r2 = std::norm(plan.bs.r);

    // running s_m = T s_{m-1} + alpha_m gives both the exponent sum and gamma_k
    Complex s = 0.0;
    double exponent_sum = 0.0;
    for (int m = 1; m <= k; ++m) {
        s = t * s + plan.alphas[m - 1];
        exponent_sum += std::norm(s);
    }
    const Complex gamma = t * s;
    const double log_exp_factor = -r2 * exponent_sum;

    // anything this small cannot resurface above 1e-300 for k <= 30
    if (log_exp_factor < -1500.0)
        throw ZeroNorm("stage_norm_sq: success probability underflows");

    // ||prod_m (a+ + b*) |gamma>||^2 with the product conjugated onto the
    // vacuum: D+(gamma) (a+ + b*) D(gamma) = a+ + b* + gamma*, so the norm is
    // sum_j j! |e_{k-j}({b* + gamma*})|^2 -- the same moment double sum
    // moments after the coherent offset is absorbed, but with every term
    // positive (the literal m,l double sum cancels catastrophically once
    // |b| grows past a few units).
    const std::vector<Complex> b = b_coefficients(plan, k);
    std::vector<Complex> shifted(b.size());
    for (size_t i = 0; i < b.size(); ++i) shifted[i] = std::conj(b[i]) + std::conj(gamma);
    const std::vector<Complex> e = elementary_symmetric(shifted);
    double product_norm = 0.0;
    double factorial_j = 1.0;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) factorial_j *= j;
        product_norm += factorial_j * std::norm(e[k - j]);
    }

    if (!std::isfinite(product_norm))
        throw NumericalInconsistency("stage_norm_sq: nonfinite product norm");
    if (!(product_norm > 0.0))
        throw NumericalInconsistency("stage_norm_sq: nonpositive product norm");

    const double prefactor =
        std::pow(r2, k) * std::pow(std::abs(t), static_cast<double>(k) * (k - 1));
    double value;
    if (log_exp_factor > -600.0)
        value = prefactor * product_norm * std::exp(log_exp_factor);
    else
        value = std::exp(std::log(prefactor) + std::log(product_norm) + log_exp_factor);
    if (!(value > 0.0) || value < 1e-300)
        throw ZeroNorm("stage_norm_sq: success probability underflows");
    return value;
}

ProbabilityBreakdown breakdown(const SynthesisPlan& plan) {
    ProbabilityBreakdown out;
    const int n = plan.stages();
    if (n == 0) return out; // empty plan: no detectors, total stays 1
    out.gammas.reserve(n);
    out.b_table.reserve(n);
    out.stage_norms_sq.reserve(n);
    out.conditionals.reserve(n);
    for (int k = 1; k <= n; ++k) {
        out.gammas.push_back(gamma_k(plan, k));
        out.b_table.push_back(b_coefficients(plan, k));
        out.stage_norms_sq.push_back(stage_norm_sq(plan, k));
        const double prev = (k == 1) ? 1.0 : out.stage_norms_sq[k - 2];
        out.conditionals.push_back(out.stage_norms_sq.back() / prev);
    }
    out.total = out.stage_norms_sq.back();
    double telescoped = 1.0;
    for (double c : out.conditionals) telescoped *= c;
    if (std::abs(telescoped - out.total) > 1e-12 * out.total)
        throw NumericalInconsistency("breakdown: conditional product mismatch");
    return out;
}

} // namespace fockprep
