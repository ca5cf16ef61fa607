#include "fockprep/math_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fockprep {

double laguerre(int n, int m, double x) {
    if (n < 0 || m < 0) throw std::invalid_argument("laguerre: n and m must be nonnegative");
    if (n == 0) return 1.0;
    double prev = 1.0;                 // L_0
    double cur = m + 1.0 - x;          // L_1
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + m + 1.0 - x) * cur - (k + m) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> laguerre_sequence(int nmax, int m, double x) {
    if (nmax < 0 || m < 0) throw std::invalid_argument("laguerre_sequence: negative index");
    std::vector<double> out(static_cast<size_t>(nmax) + 1);
    out[0] = 1.0;
    if (nmax == 0) return out;
    out[1] = m + 1.0 - x;
    for (int k = 1; k < nmax; ++k)
        out[k + 1] = ((2.0 * k + m + 1.0 - x) * out[k] - (k + m) * out[k - 1]) / (k + 1.0);
    return out;
}

std::vector<Complex> elementary_symmetric(const std::vector<Complex>& values) {
    std::vector<Complex> e(values.size() + 1, Complex(0.0));
    e[0] = 1.0;
    size_t used = 0;
    for (const Complex& v : values) {
        ++used;
        for (size_t j = used; j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e;
}

double principal_phase(Complex z) {
    double phi = std::arg(z);
    if (phi <= -std::numbers::pi) phi += 2.0 * std::numbers::pi;
    return phi;
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
    if (coeffs_.empty() || coeffs_.back() == Complex(0.0))
        throw std::invalid_argument("Polynomial: all coefficients are zero");
}

Complex Polynomial::operator()(Complex x) const {
    Complex acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Complex Polynomial::derivative_at(Complex x) const {
    Complex acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 1;)
        acc = acc * x + static_cast<double>(i) * coeffs_[i];
    return acc;
}

namespace {

// Ascending modulus; groups of near-equal modulus reordered by ascending phase.
// Two passes keep each comparator strict-weak (a tolerance comparator is not).
void canonical_sort(std::vector<Complex>& roots) {
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma < mb;
        return principal_phase(a) < principal_phase(b);
    });
    size_t i = 0;
    while (i < roots.size()) {
        size_t j = i + 1;
        while (j < roots.size() &&
               std::abs(std::abs(roots[j]) - std::abs(roots[j - 1])) <=
                   1e-12 * std::max(1.0, std::abs(roots[j])))
            ++j;
        std::sort(roots.begin() + i, roots.begin() + j, [](Complex a, Complex b) {
            return principal_phase(a) < principal_phase(b);
        });
        i = j;
    }
}

// Root-modulus bound from coefficient ratios (Fujiwara-style).
double root_radius_bound(const std::vector<Complex>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    double r = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double ratio = std::abs(c[n - k] / c[n]);
        if (ratio > 0.0) r = std::max(r, std::pow(ratio, 1.0 / k));
    }
    return r > 0.0 ? 2.0 * r : 1.0;
}

struct HornerEval {
    Complex value;
    Complex derivative;
    double error_floor; // rounding-error bound of the evaluation itself
};

// Value, derivative, and an Adams-style running error bound in one pass.
// |p(z)| at or below the floor cannot be distinguished from zero in double
// precision, which is the right stopping rule near multiple roots.
HornerEval evaluate(const std::vector<Complex>& c, Complex z) {
    const double az = std::abs(z);
    Complex p = c.back();
    Complex dp = 0.0;
    double mag = std::abs(p);
    for (size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
        mag = mag * az + std::abs(p);
    }
    constexpr double kEps = 2.22e-16;
    return {p, dp, 4.0 * kEps * mag};
}

} // namespace

std::vector<Complex> find_roots(const Polynomial& p, const RootOptions& opts) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");

    std::vector<Complex> c = p.coeffs();
    double max_coeff = 0.0;
    for (const Complex& v : c) max_coeff = std::max(max_coeff, std::abs(v));

    // Roots at the origin come out exactly.
    std::vector<Complex> roots;
    size_t nzero = 0;
    while (nzero < c.size() - 1 && c[nzero] == Complex(0.0)) ++nzero;
    roots.assign(nzero, Complex(0.0));
    c.erase(c.begin(), c.begin() + nzero);

    const int n = static_cast<int>(c.size()) - 1;
    if (n >= 1) {
        std::vector<Complex> z(n);
        if (n == 1) {
            z[0] = -c[0] / c[1];
        } else {
            const double radius = root_radius_bound(c);
            for (int i = 0; i < n; ++i) {
                const double angle = 2.0 * std::numbers::pi * i / n + 0.4;
                z[i] = std::polar(radius, angle);
            }
            bool converged = false;
            for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
                converged = true;
                for (int i = 0; i < n; ++i) {
                    const HornerEval ev = evaluate(c, z[i]);
                    // at the evaluation noise floor the root cannot improve
                    // (this is also where clustered multiple roots settle)
                    if (std::abs(ev.value) <= ev.error_floor) continue;
                    Complex step;
                    if (ev.derivative == Complex(0.0)) {
                        step = Complex(1e-8, 1e-8) * (1.0 + std::abs(z[i]));
                    } else {
                        const Complex ratio = ev.value / ev.derivative;
                        Complex repulsion = 0.0;
                        for (int j = 0; j < n; ++j) {
                            if (j == i) continue;
                            const Complex diff = z[i] - z[j];
                            if (std::abs(diff) > 1e-300) repulsion += 1.0 / diff;
                        }
                        step = ratio / (1.0 - ratio * repulsion);
                    }
                    z[i] -= step;
                    if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[i]))) converged = false;
                }
            }
            if (!converged)
                throw NonConvergence("find_roots: Aberth iteration budget exhausted");
        }

        // Newton polishing. Stops at the evaluation noise floor or when the
        // step stalls (multiple roots polish no further than their
        // conditioning allows).
        for (Complex& r : z) {
            for (int it = 0; it < 32; ++it) {
                const HornerEval ev = evaluate(c, r);
                if (std::abs(ev.value) <= ev.error_floor || ev.derivative == Complex(0.0))
                    break;
                const Complex step = ev.value / ev.derivative;
                if (std::abs(step) <= 1e-16 * (1.0 + std::abs(r))) break;
                r -= step;
            }
        }

        for (const Complex& r : z) {
            const double residual_bound =
                1e-10 * max_coeff * std::pow(std::max(1.0, std::abs(r)), p.degree());
            if (std::abs(p(r)) > residual_bound)
                throw NonConvergence("find_roots: polished root failed the residual check");
            roots.push_back(r);
        }
    }

    canonical_sort(roots);
    return roots;
}

Polynomial poly_from_roots(const std::vector<Complex>& roots, Complex leading) {
    if (leading == Complex(0.0))
        throw std::invalid_argument("poly_from_roots: leading coefficient is zero");
    std::vector<Complex> c{leading};
    for (const Complex& r : roots) {
        c.push_back(c.back());
        for (size_t j = c.size() - 2; j >= 1; --j) c[j] = c[j - 1] - r * c[j];
        c[0] *= -r;
    }
    return Polynomial(std::move(c));
}

} // namespace fockprep
