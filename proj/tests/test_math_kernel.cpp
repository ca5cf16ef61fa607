#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "fockprep/math_kernel.hpp"
#include "test_helpers.hpp"

using fockprep::Complex;
using fockprep::Polynomial;

namespace {

// Independent oracle: L_n^m(x) = sum_i (-1)^i C(n+m, n-i) x^i / i!
double laguerre_series(int n, int m, double x) {
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double binom = std::exp(std::lgamma(n + m + 1.0) - std::lgamma(n - i + 1.0) -
                                      std::lgamma(m + i + 1.0));
        sum += (i % 2 == 0 ? 1.0 : -1.0) * binom * std::pow(x, i) /
               std::exp(std::lgamma(i + 1.0));
    }
    return sum;
}

// Independent oracle: exhaustive subset enumeration (k <= ~20).
std::vector<Complex> elementary_symmetric_brute(const std::vector<Complex>& v) {
    std::vector<Complex> e(v.size() + 1, Complex(0.0));
    const size_t masks = size_t{1} << v.size();
    for (size_t mask = 0; mask < masks; ++mask) {
        Complex prod = 1.0;
        int bits = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            if (mask & (size_t{1} << i)) {
                prod *= v[i];
                ++bits;
            }
        }
        e[bits] += prod;
    }
    return e;
}

// Independent oracle: eigenvalues of the companion matrix.
std::vector<Complex> companion_roots(const Polynomial& p) {
    const int n = p.degree();
    const auto& c = p.coeffs();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
    std::vector<Complex> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

// Greedy closest-pair matching distance between two root multisets.
double match_distance(std::vector<Complex> a, std::vector<Complex> b) {
    double worst = 0.0;
    for (const Complex& x : a) {
        auto best = std::min_element(b.begin(), b.end(), [&](Complex u, Complex v) {
            return std::abs(u - x) < std::abs(v - x);
        });
        worst = std::max(worst, std::abs(*best - x));
        b.erase(best);
    }
    return worst;
}

std::vector<Complex> phase_state_char_coeffs(double z, int n) {
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    double zp = 1.0, fact = 1.0;
    for (int k = 0; k <= n; ++k) {
        c[k] = zp / std::sqrt(fact);
        zp *= z;
        fact *= k + 1;
    }
    return c;
}

} // namespace

TEST_CASE("laguerre low orders") {
    CHECK(fockprep::laguerre(0, 0, 2.5) == 1.0);
    CHECK(fockprep::laguerre(0, 7, -3.0) == 1.0);
    CHECK(fockprep::laguerre(1, 2, -1.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(fockprep::laguerre(2, 0, -1.0) == doctest::Approx(3.5).epsilon(1e-15));
    CHECK(fockprep::laguerre(2, 0, -1.0) ==
          doctest::Approx(laguerre_series(2, 0, -1.0)).epsilon(1e-13));
}

TEST_CASE("laguerre matches the series oracle") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(-50.0, 0.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng() % 12);
        const int m = static_cast<int>(rng() % 8);
        const double x = xs(rng);
        const double got = fockprep::laguerre(n, m, x);
        const double want = laguerre_series(n, m, x);
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("laguerre recurrence residual") {
    for (int m = 0; m <= 10; m += 2) {
        for (double x : {-50.0, -12.5, -1.0, 0.0}) {
            const auto seq = fockprep::laguerre_sequence(31, m, x);
            for (int n = 1; n <= 30; ++n) {
                const double res = (n + 1.0) * seq[n + 1] -
                                   (2.0 * n + m + 1.0 - x) * seq[n] + (n + m) * seq[n - 1];
                CHECK(std::abs(res) <= 1e-10 * std::max(1.0, std::abs(seq[n + 1])));
            }
        }
    }
}

TEST_CASE("elementary symmetric basics") {
    CHECK(fockprep::elementary_symmetric({}) == std::vector<Complex>{Complex(1.0)});

    const Complex b(0.5, -1.0), c(2.0, 0.25);
    const auto e = fockprep::elementary_symmetric({b, c});
    REQUIRE(e.size() == 3);
    CHECK(e[0] == Complex(1.0));
    CHECK(std::abs(e[1] - (b + c)) <= 1e-15);
    CHECK(std::abs(e[2] - b * c) <= 1e-15);
}

TEST_CASE("elementary symmetric matches subset enumeration") {
    std::mt19937_64 rng(22);
    for (int k : {3, 6, 8}) {
        std::vector<Complex> values;
        for (int i = 0; i < k; ++i) values.push_back(test_helpers::random_gaussian(rng));
        const auto fast = fockprep::elementary_symmetric(values);
        const auto brute = elementary_symmetric_brute(values);
        REQUIRE(fast.size() == brute.size());
        for (size_t i = 0; i < fast.size(); ++i)
            CHECK(std::abs(fast[i] - brute[i]) <= 1e-12 * std::max(1.0, std::abs(brute[i])));
    }
}

TEST_CASE("polynomial construction strips trailing zeros") {
    const Polynomial p({Complex(1.0), Complex(2.0), Complex(0.0), Complex(0.0)});
    CHECK(p.degree() == 1);
    CHECK_THROWS_AS(Polynomial({Complex(0.0), Complex(0.0)}), std::invalid_argument);
}

TEST_CASE("find_roots trivial cases") {
    const auto monomial = fockprep::find_roots(Polynomial({Complex(0.0), Complex(1.0)}));
    REQUIRE(monomial.size() == 1);
    CHECK(monomial[0] == Complex(0.0));

    const auto linear = fockprep::find_roots(Polynomial({Complex(1.0), Complex(1.0)}));
    REQUIRE(linear.size() == 1);
    CHECK(std::abs(linear[0] - Complex(-1.0)) <= 1e-14);
}

TEST_CASE("find_roots matches the companion-matrix oracle") {
    const Polynomial p(phase_state_char_coeffs(0.4, 6));
    const auto roots = fockprep::find_roots(p);
    REQUIRE(roots.size() == 6);
    CHECK(match_distance(roots, companion_roots(p)) <= 1e-8);
    // canonical order: ascending modulus, conjugate partners by ascending phase
    for (size_t i = 1; i < roots.size(); ++i)
        CHECK(std::abs(roots[i]) >= std::abs(roots[i - 1]) - 1e-9);
    CHECK(fockprep::principal_phase(roots[0]) < fockprep::principal_phase(roots[1]));
}

TEST_CASE("find_roots residual contract") {
    const Polynomial p(phase_state_char_coeffs(0.4, 6));
    double max_coeff = 0.0;
    for (const auto& c : p.coeffs()) max_coeff = std::max(max_coeff, std::abs(c));
    for (const Complex& r : fockprep::find_roots(p)) {
        const double bound = 1e-10 * max_coeff * std::pow(std::max(1.0, std::abs(r)), 6);
        CHECK(std::abs(p(r)) <= bound);
    }
}

TEST_CASE("find_roots reports non-convergence when starved") {
    std::mt19937_64 rng(33);
    const Polynomial p(test_helpers::random_coeffs(rng, 9));
    CHECK_THROWS_AS(fockprep::find_roots(p, {.max_sweeps = 1}), fockprep::NonConvergence);
}

TEST_CASE("poly_from_roots basics") {
    const auto unit = fockprep::poly_from_roots({}, Complex(1.0));
    CHECK(unit.degree() == 0);
    CHECK(unit.coeffs()[0] == Complex(1.0));

    const auto shifted = fockprep::poly_from_roots({Complex(-1.0)}, Complex(1.0));
    REQUIRE(shifted.degree() == 1);
    CHECK(std::abs(shifted.coeffs()[0] - Complex(1.0)) <= 1e-15);
    CHECK(std::abs(shifted.coeffs()[1] - Complex(1.0)) <= 1e-15);
}

TEST_CASE("find_roots / poly_from_roots round trips") {
    SUBCASE("coefficients of the z=0.4 N=6 characteristic polynomial") {
        const auto coeffs = phase_state_char_coeffs(0.4, 6);
        const Polynomial p(coeffs);
        const auto roots = fockprep::find_roots(p);
        const auto rebuilt = fockprep::poly_from_roots(roots, coeffs.back());
        for (size_t i = 0; i < coeffs.size(); ++i)
            CHECK(std::abs(rebuilt.coeffs()[i] - coeffs[i]) <=
                  1e-9 * std::max(1.0, std::abs(coeffs[i])));
    }
    SUBCASE("root multisets of random well-separated polynomials") {
        std::mt19937_64 rng(44);
        for (int trial = 0; trial < 20; ++trial) {
            const int degree = 2 + static_cast<int>(rng() % 9);
            std::vector<Complex> roots;
            while (static_cast<int>(roots.size()) < degree) {
                const Complex candidate = 2.0 * test_helpers::random_gaussian(rng);
                const bool separated =
                    std::all_of(roots.begin(), roots.end(), [&](Complex r) {
                        return std::abs(r - candidate) > 0.35;
                    });
                if (separated) roots.push_back(candidate);
            }
            const auto p = fockprep::poly_from_roots(roots, Complex(1.0, 0.5));
            const auto found = fockprep::find_roots(p);
            CHECK(match_distance(found, roots) <= 1e-8);
        }
    }
}

TEST_CASE("principal phase lands in (-pi, pi]") {
    CHECK(fockprep::principal_phase(Complex(-1.0, 0.0)) == doctest::Approx(3.14159265358979));
    CHECK(fockprep::principal_phase(Complex(0.0, -1.0)) == doctest::Approx(-1.5707963267949));
}
