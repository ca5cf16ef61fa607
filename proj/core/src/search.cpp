#include "fockprep/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace fockprep {

namespace {

constexpr double kGolden = 0.6180339887498949; // (sqrt(5)-1)/2

std::vector<Complex> canonical_betas(const TargetState& t) {
    const std::vector<Complex> roots = find_roots(characteristic_coeffs(t));
    std::vector<Complex> betas(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) betas[i] = std::conj(roots[i]);
    return betas;
}

double total_or_nan(const TargetState& t, const std::vector<Complex>& betas,
                    double abs_t, double phase_t) {
    try {
        const auto bs = BeamSplitter::from_transmittance(std::polar(abs_t, phase_t));
        return breakdown(compile_with_betas(t, bs, betas)).total;
    } catch (const std::exception&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

// Golden-section maximization; f returns -inf-like values for invalid points.
std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo,
                                     double hi, double tol) {
    double a = lo, b = hi;
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    return {mid, f(mid)};
}

} // namespace

SweepCurve sweep_T(const TargetState& t, const std::vector<double>& grid, double phase_t) {
    SweepCurve curve;
    curve.n = t.degree();
    curve.target_id = "degree-" + std::to_string(t.degree()) + " target";
    curve.samples.reserve(grid.size());
    std::vector<Complex> betas;
    if (t.degree() >= 1) betas = canonical_betas(t);
    for (double g : grid)
        curve.samples.push_back({g, t.degree() == 0 ? 1.0 : total_or_nan(t, betas, g, phase_t)});
    return curve;
}

CommonTOptimum optimize_common_T(const TargetState& t, std::pair<double, double> bracket) {
    const auto [lo, hi] = bracket;
    if (!(lo > 0.0 && lo < hi && hi < 1.0))
        throw std::invalid_argument("optimize_common_T: bracket must lie in (0, 1)");
    if (t.degree() == 0) return {lo, 1.0};
    const std::vector<Complex> betas = canonical_betas(t);
    const auto objective = [&](double x) {
        const double p = total_or_nan(t, betas, x, 0.0);
        return std::isnan(p) ? -1.0 : p;
    };
    constexpr int kGridPoints = 101;
    double best_x = lo, best_p = -1.0;
    std::vector<double> grid(kGridPoints);
    for (int i = 0; i < kGridPoints; ++i) {
        grid[i] = lo + (hi - lo) * i / (kGridPoints - 1);
        const double p = objective(grid[i]);
        if (p > best_p) {
            best_p = p;
            best_x = grid[i];
        }
    }
    const int best_i = static_cast<int>(
        std::lround((best_x - lo) / (hi - lo) * (kGridPoints - 1)));
    const double a = grid[std::max(0, best_i - 1)];
    const double b = grid[std::min(kGridPoints - 1, best_i + 1)];
    const auto [rx, rp] = golden_max(objective, a, b, 1e-5);
    if (rp > best_p) return {rx, rp};
    return {best_x, best_p};
}

StagewiseConfig optimize_stagewise(const TargetState& t, double init, int iters) {
    if (!(init > 0.0 && init < 1.0))
        throw std::invalid_argument("optimize_stagewise: init must lie in (0, 1)");
    const int n = t.degree();
    if (n == 0) return {{}, {Complex(0.0)}, 1.0};
    const std::vector<Complex> betas = canonical_betas(t);
    const FockVector target = t.to_fock();

    const auto evaluate = [&](const std::vector<double>& ts) -> double {
        std::vector<Complex> tsc(ts.begin(), ts.end());
        std::vector<BeamSplitter> stages;
        stages.reserve(ts.size());
        try {
            for (double x : ts) stages.push_back(BeamSplitter::from_transmittance(x));
            const std::vector<Complex> alphas = stagewise_alphas(betas, tsc);
            const SimOutcome sim = run_cascade(alphas, stages, {}, &target);
            if (sim.fidelity_with_target < 1.0 - 1e-9) return -1.0;
            return sim.total_prob;
        } catch (const std::exception&) {
            return -1.0;
        }
    };

    std::vector<double> ts(static_cast<size_t>(n), init);
    double best = evaluate(ts);
    if (best < 0.0)
        throw ValidationFailure("optimize_stagewise: init config never reproduced the target");

    double window = 0.05;
    for (int pass = 0; pass < iters; ++pass) {
        for (int k = 0; k < n; ++k) {
            const double lo = std::max(0.02, ts[k] - window);
            const double hi = std::min(0.9995, ts[k] + window);
            const auto coord = [&](double x) {
                std::vector<double> trial = ts;
                trial[k] = x;
                return evaluate(trial);
            };
            const auto [x, p] = golden_max(coord, lo, hi, 1e-4);
            if (p > best) {
                best = p;
                ts[k] = x;
            }
        }
        window /= 2.0; // rejected or stalled coordinates retry on a tighter span
    }

    StagewiseConfig config;
    config.ts.assign(ts.begin(), ts.end());
    config.alphas = stagewise_alphas(betas, config.ts);
    config.prob = best;
    return config;
}

OrderOptimum optimize_root_order(const TargetState& t, const BeamSplitter& bs, int limit) {
    const int n = t.degree();
    if (n == 0) return {{}, 1.0};
    const std::vector<Complex> canonical = canonical_betas(t);

    const auto total_for = [&](const std::vector<int>& order) {
        std::vector<Complex> betas(canonical.size());
        for (size_t i = 0; i < betas.size(); ++i) betas[i] = canonical[order[i]];
        return breakdown(compile_with_betas(t, bs, betas, order)).total;
    };

    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;

    if (n <= limit) {
        std::vector<int> perm = identity;
        std::vector<int> best_order = identity;
        double best_p = total_for(identity);
        while (std::next_permutation(perm.begin(), perm.end())) {
            const double p = total_for(perm);
            if (p > best_p) {
                best_p = p;
                best_order = perm;
            }
        }
        return {best_order, best_p};
    }

    // pairwise-swap hill climbing from canonical order
    std::vector<int> order = identity;
    double best_p = total_for(order);
    for (bool improved = true; improved;) {
        improved = false;
        std::vector<int> best_order = order;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> trial = order;
                std::swap(trial[i], trial[j]);
                const double p = total_for(trial);
                if (p > best_p) {
                    best_p = p;
                    best_order = trial;
                    improved = true;
                }
            }
        }
        order = best_order;
    }
    return {order, best_p};
}

} // namespace fockprep
