#pragma once

#include <vector>

#include "fockprep/complex_matrix.hpp"
#include "fockprep/errors.hpp"
#include "fockprep/math_kernel.hpp"

namespace fockprep {

/// How adaptive truncation behaves. min_cutoff forces a floor on every
/// adaptively chosen cutoff (used to verify truncation robustness).
struct TruncationPolicy {
    double tail_tol = 1e-12;
    int max_cutoff = 4096;
    int min_cutoff = 0;
};

/// Single-mode state on the truncated Fock basis; amps[n] multiplies |n>.
struct FockVector {
    std::vector<Complex> amps{Complex(0.0)};

    int cutoff() const { return static_cast<int>(amps.size()) - 1; }

    static FockVector vacuum() { return fock(0); }
    static FockVector fock(int n);
};

/// Coherent state |alpha> truncated at the given cutoff.
FockVector coherent_state(Complex alpha, int cutoff);

/// Creation operator: out[n+1] = sqrt(n+1) in[n]; grows the cutoff by one.
FockVector apply_creation(const FockVector& s, int max_cutoff = TruncationPolicy{}.max_cutoff);

/// Number-scaling T^n: out[n] = t^n in[n]. Requires |t| <= 1.
FockVector apply_number_scaling(const FockVector& s, Complex t);

/// Matrix elements <m|D(alpha)|n> of the coherent displacement operator on a
/// dim-dimensional truncation, from the generalized-Laguerre closed form
///   <m|D|n> = sqrt(n!/m!) alpha^{m-n} e^{-|alpha|^2/2} L_n^{m-n}(|alpha|^2),  m >= n,
/// with the conjugate-reflection rule for m < n. Factorial ratios are folded
/// in incrementally along each diagonal so every intermediate stays O(1).
ComplexMatrix displacement_matrix(Complex alpha, int dim,
                                  int max_cutoff = TruncationPolicy{}.max_cutoff);

/// Applies D(alpha) at a cutoff grown (doubling) from the initial guess
/// current + ceil(4|a|^2 + 10|a| + 10) until the top-5-amplitude tail norm
/// drops below tail_tol * ||s||. Norm is preserved within 10 * tail_tol.
FockVector displace(const FockVector& s, Complex alpha, const TruncationPolicy& policy = {});

/// Drops the largest trailing block whose norm is <= tol * ||s||, never below
/// cutoff keep_at_least.
FockVector trim_tail(const FockVector& s, double tol, int keep_at_least = 0);

/// Sesquilinear inner product, conjugate-linear in the first argument;
/// the shorter vector is zero-padded.
Complex inner_product(const FockVector& a, const FockVector& b);

double norm_sq(const FockVector& s);
double norm(const FockVector& s);

/// |<a|b>|^2 / (||a||^2 ||b||^2). Throws ZeroNorm on a zero vector.
double fidelity(const FockVector& a, const FockVector& b);

} // namespace fockprep
