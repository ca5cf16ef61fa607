#include "fockprep/targets.hpp"

#include <cmath>

namespace fockprep {

TargetState make_target(std::vector<Complex> coeffs) {
    while (!coeffs.empty() && coeffs.back() == Complex(0.0)) coeffs.pop_back();
    if (coeffs.empty()) throw AllZero("make_target: every coefficient is zero");
    double n2 = 0.0;
    for (const Complex& c : coeffs) n2 += std::norm(c);
    if (n2 == 0.0) throw AllZero("make_target: every coefficient is zero");
    const double inv = 1.0 / std::sqrt(n2);
    for (Complex& c : coeffs) c *= inv;
    return TargetState{std::move(coeffs)};
}

TargetState phase_state(const PhaseStateSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("phase_state: N must be >= 0");
    const double az = std::abs(spec.z);
    if (az > 1.0) throw std::invalid_argument("phase_state: |z| must be <= 1");
    double c;
    if (az < 1.0)
        c = std::sqrt((1.0 - az * az) / (1.0 - std::pow(az, 2.0 * (spec.n + 1))));
    else
        c = 1.0 / std::sqrt(static_cast<double>(spec.n) + 1.0);
    std::vector<Complex> psi(static_cast<size_t>(spec.n) + 1);
    Complex zn = 1.0;
    for (int n = 0; n <= spec.n; ++n) {
        psi[n] = c * zn;
        zn *= spec.z;
    }
    // z = 0 leaves the vacuum at its true degree
    return make_target(std::move(psi));
}

} // namespace fockprep
