#pragma once

#include <complex>
#include <vector>

#include "fockprep/errors.hpp"

namespace fockprep {

using Complex = std::complex<double>;

/// Generalized Laguerre polynomial L_n^m(x), computed by the three-term
/// recurrence in n. Exact for n <= 1; stable for the x <= 0 arguments this
/// library feeds it (all recurrence terms share a sign there).
double laguerre(int n, int m, double x);

/// L_0^m(x) .. L_nmax^m(x) in one recurrence pass.
std::vector<double> laguerre_sequence(int nmax, int m, double x);

/// Elementary symmetric polynomials e_0..e_k of the given k values, e_0 = 1,
/// by the Vieta-style incremental product (O(k^2), never subset enumeration).
std::vector<Complex> elementary_symmetric(const std::vector<Complex>& values);

/// Phase of z mapped to (-pi, pi] (the -pi branch value folds to +pi).
double principal_phase(Complex z);

/// Dense univariate polynomial, coefficients in ascending degree order.
/// Construction strips trailing zero coefficients, so the leading coefficient
/// is always nonzero and degree() is the true degree.
class Polynomial {
public:
    explicit Polynomial(std::vector<Complex> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Complex operator()(Complex x) const;
    Complex derivative_at(Complex x) const;

private:
    std::vector<Complex> coeffs_;
};

struct RootOptions {
    int max_sweeps = 1000;
};

/// All complex roots with multiplicity, found by Aberth-Ehrlich simultaneous
/// iteration (initial guesses on a circle sized from the coefficient-ratio
/// bound) followed by Newton polishing. Output is canonically ordered:
/// ascending modulus, near-equal moduli broken by ascending phase in (-pi, pi].
/// Each root satisfies |p(root)| <= 1e-10 * max|coeff| * max(1,|root|)^degree.
/// Throws NonConvergence if the sweep budget is exhausted.
std::vector<Complex> find_roots(const Polynomial& p, const RootOptions& opts = {});

/// Expands leading * prod_i (x - roots[i]) into coefficients.
Polynomial poly_from_roots(const std::vector<Complex>& roots, Complex leading);

} // namespace fockprep
