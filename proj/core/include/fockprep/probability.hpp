#pragma once

#include <vector>

#include "fockprep/synthesis.hpp"

namespace fockprep {

/// Closed-form success bookkeeping: stage offsets gamma_k, the b_mk tables,
/// cumulative stage norms P_k^2, the per-detector conditional probabilities,
/// and the total P = P_N^2.
struct ProbabilityBreakdown {
    std::vector<Complex> gammas;
    std::vector<std::vector<Complex>> b_table;
    std::vector<double> stage_norms_sq;
    std::vector<double> conditionals;
    double total = 1.0;
};

/// gamma_k = sum_{j=1..k} T^{k+1-j} alpha_j  (k is 1-based throughout).
Complex gamma_k(const SynthesisPlan& plan, int k);

/// b_1k = 0, b_mk = -sum_{j=0..m-2} conj(T)^{-j-1} alpha_{k-j}, m = 2..k.
std::vector<Complex> b_coefficients(const SynthesisPlan& plan, int k);

/// <gamma| a^{k-m} a+^{k-l} |gamma> for a normalized coherent state:
///   (k-m)! conj(gamma)^{m-l} L_{k-m}^{m-l}(-|gamma|^2)   if l < m,
///   (k-l)! gamma^{l-m}       L_{k-l}^{l-m}(-|gamma|^2)   if l >= m.
Complex coherent_moment(Complex gamma, int k, int m, int l);

/// Stage norm P_k^2: |R|^{2k} |T|^{k(k-1)} ||prod_m (a+ + b_mk*) |gamma_k>||^2
/// * exp(-|R|^2 sum_m |sum_{j<=m} T^{m-j} alpha_j|^2). The product norm is
/// expanded over elementary symmetric polynomials of the gamma-shifted b_mk
/// (a positive-term rearrangement of the m,l moment double sum; see the
/// implementation note). Throws NumericalInconsistency when the assembled
/// value is not a positive real (implementation fault upstream) and ZeroNorm
/// when it underflows below 1e-300.
double stage_norm_sq(const SynthesisPlan& plan, int k);

/// All stages at once; conditionals are the stage-norm ratios and
/// total = P_N^2 = product of conditionals. A 0-stage plan yields total 1.
ProbabilityBreakdown breakdown(const SynthesisPlan& plan);

} // namespace fockprep
