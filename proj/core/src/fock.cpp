#include "fockprep/fock.hpp"

#include <algorithm>
#include <cmath>

namespace fockprep {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& v) const {
    std::vector<Complex> out(static_cast<size_t>(rows_), Complex(0.0));
    const int nv = std::min<int>(cols_, static_cast<int>(v.size()));
    for (int r = 0; r < rows_; ++r) {
        Complex acc = 0.0;
        const Complex* row = &data_[static_cast<size_t>(r) * cols_];
        for (int c = 0; c < nv; ++c) acc += row[c] * v[c];
        out[r] = acc;
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix: shape mismatch");
    ComplexMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            const Complex* brow = &b.data_[static_cast<size_t>(k) * b.cols_];
            Complex* orow = &out.data_[static_cast<size_t>(i) * out.cols_];
            for (int j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

FockVector FockVector::fock(int n) {
    if (n < 0) throw std::invalid_argument("FockVector::fock: negative photon number");
    FockVector s;
    s.amps.assign(static_cast<size_t>(n) + 1, Complex(0.0));
    s.amps[n] = 1.0;
    return s;
}

FockVector coherent_state(Complex alpha, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("coherent_state: negative cutoff");
    FockVector s;
    s.amps.assign(static_cast<size_t>(cutoff) + 1, Complex(0.0));
    // amps[n] = e^{-|a|^2/2} alpha^n / sqrt(n!), built as a running product
    Complex a = std::exp(-std::norm(alpha) / 2.0);
    s.amps[0] = a;
    for (int n = 1; n <= cutoff; ++n) {
        a *= alpha / std::sqrt(static_cast<double>(n));
        s.amps[n] = a;
    }
    return s;
}

FockVector apply_creation(const FockVector& s, int max_cutoff) {
    if (s.cutoff() + 1 > max_cutoff)
        throw CutoffExceeded("apply_creation: cutoff would exceed max_cutoff");
    FockVector out;
    out.amps.assign(s.amps.size() + 1, Complex(0.0));
    for (size_t n = 0; n < s.amps.size(); ++n)
        out.amps[n + 1] = std::sqrt(static_cast<double>(n + 1)) * s.amps[n];
    return out;
}

FockVector apply_number_scaling(const FockVector& s, Complex t) {
    if (std::abs(t) > 1.0 + 1e-12)
        throw std::invalid_argument("apply_number_scaling: |t| must be <= 1");
    FockVector out = s;
    Complex tn = 1.0;
    for (size_t n = 1; n < out.amps.size(); ++n) {
        tn *= t;
        out.amps[n] *= tn;
    }
    return out;
}

ComplexMatrix displacement_matrix(Complex alpha, int dim, int max_cutoff) {
    if (dim < 1) throw std::invalid_argument("displacement_matrix: dim must be >= 1");
    if (dim - 1 > max_cutoff)
        throw CutoffExceeded("displacement_matrix: dim exceeds max_cutoff");
    ComplexMatrix d(dim, dim);
    const double x = std::norm(alpha);
    if (x == 0.0) {
        for (int i = 0; i < dim; ++i) d(i, i) = 1.0;
        return d;
    }
    const double log_abs = std::log(std::abs(alpha));
    const double phase = std::arg(alpha);
    for (int k = 0; k < dim; ++k) {
        // Scaled diagonal walk: m_n = sqrt(n!/(n+k)!) alpha^k e^{-x/2} L_n^k(x),
        // bounded by 1 throughout (entries of a unitary), so no over/underflow.
        const double log_m0 = -x / 2.0 + k * log_abs - 0.5 * std::lgamma(k + 1.0);
        Complex m = std::exp(log_m0) * std::polar(1.0, k * phase);
        const double upper_sign = (k % 2 == 0) ? 1.0 : -1.0;
        Complex m_prev = 0.0;
        for (int n = 0; n + k < dim; ++n) {
            d(n + k, n) = m;
            d(n, n + k) = upper_sign * std::conj(m);
            const Complex m_next =
                ((2.0 * n + k + 1.0 - x) * m -
                 std::sqrt(static_cast<double>(n) * (n + k)) * m_prev) /
                std::sqrt(static_cast<double>(n + 1) * (n + 1 + k));
            m_prev = m;
            m = m_next;
        }
    }
    return d;
}

FockVector displace(const FockVector& s, Complex alpha, const TruncationPolicy& policy) {
    const double in_norm = norm(s);
    if (in_norm == 0.0) return s;
    const double a = std::abs(alpha);
    const int grow = static_cast<int>(std::ceil(4.0 * a * a + 10.0 * a + 10.0));
    int cutoff = std::max(s.cutoff() + grow, policy.min_cutoff);
    cutoff = std::min(cutoff, policy.max_cutoff);
    for (;;) {
        const ComplexMatrix d = displacement_matrix(alpha, cutoff + 1, policy.max_cutoff);
        FockVector out;
        out.amps = d.apply(s.amps);
        double tail2 = 0.0;
        for (size_t i = out.amps.size() - std::min<size_t>(5, out.amps.size());
             i < out.amps.size(); ++i)
            tail2 += std::norm(out.amps[i]);
        if (std::sqrt(tail2) < policy.tail_tol * in_norm) return out;
        if (cutoff >= policy.max_cutoff)
            throw CutoffExceeded("displace: tail did not converge below max_cutoff");
        cutoff = std::min(2 * cutoff, policy.max_cutoff);
    }
}

FockVector trim_tail(const FockVector& s, double tol, int keep_at_least) {
    const double total = norm(s);
    if (total == 0.0) return s;
    const size_t floor_size =
        std::max<size_t>(1, static_cast<size_t>(std::max(keep_at_least, 0)) + 1);
    double tail2 = 0.0;
    size_t cut = s.amps.size();
    for (size_t i = s.amps.size(); i-- > floor_size;) {
        tail2 += std::norm(s.amps[i]);
        if (std::sqrt(tail2) <= tol * total)
            cut = i;
        else
            break;
    }
    FockVector out;
    out.amps.assign(s.amps.begin(), s.amps.begin() + std::max(cut, floor_size));
    return out;
}

Complex inner_product(const FockVector& a, const FockVector& b) {
    const size_t n = std::min(a.amps.size(), b.amps.size());
    Complex acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += std::conj(a.amps[i]) * b.amps[i];
    return acc;
}

double norm_sq(const FockVector& s) {
    double acc = 0.0;
    for (const Complex& v : s.amps) acc += std::norm(v);
    return acc;
}

double norm(const FockVector& s) { return std::sqrt(norm_sq(s)); }

double fidelity(const FockVector& a, const FockVector& b) {
    const double na = norm_sq(a), nb = norm_sq(b);
    if (na == 0.0 || nb == 0.0) throw ZeroNorm("fidelity: zero-norm state");
    return std::norm(inner_product(a, b)) / (na * nb);
}

} // namespace fockprep
