#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fockprep/simulator.hpp"

namespace fockprep {

/// One sampled point of a |T| sweep. prob is NaN for points whose plan or
/// closed form failed (e.g. probability underflow at small |T|).
struct SweepPoint {
    double abs_t = 0.0;
    double prob = 0.0;
};

struct SweepCurve {
    std::vector<SweepPoint> samples;
    std::string target_id;
    int n = 0;
};

/// Per-stage transmittances with recomputed displacement parameters; only
/// configs whose simulated output still reaches the target are ever emitted.
struct StagewiseConfig {
    std::vector<Complex> ts;
    std::vector<Complex> alphas;
    double prob = 0.0;
};

struct CommonTOptimum {
    double best_t = 0.0;
    double best_p = 0.0;
};

struct OrderOptimum {
    std::vector<int> order;
    double best_p = 0.0;
};

/// Total success probability at each grid |T| (closed form), compiling with
/// T = |T| e^{i phase_t}. Failed points are flagged NaN, never dropped.
SweepCurve sweep_T(const TargetState& t, const std::vector<double>& grid,
                   double phase_t = 0.0);

/// Coarse 101-point grid over the bracket, then golden-section refinement
/// around the best grid point to |dT| < 1e-5. Never assumes unimodality.
CommonTOptimum optimize_common_T(const TargetState& t, std::pair<double, double> bracket);

/// Coordinate descent over the per-stage |T_k| (golden section per coordinate,
/// simulator-evaluated objective). Every candidate recomputes its alphas via
/// stagewise_alphas and must keep simulated fidelity >= 1 - 1e-9; failing
/// candidates are rejected and the coordinate window shrinks each pass.
/// Improvements only are accepted, so the result never falls below the
/// uniform-init configuration. Throws ValidationFailure if even the init
/// config cannot reproduce the target.
StagewiseConfig optimize_stagewise(const TargetState& t, double init, int iters);

/// Best root order by total probability: exhaustive over all N! orders for
/// N <= limit, pairwise-swap hill climbing from canonical order otherwise.
OrderOptimum optimize_root_order(const TargetState& t, const BeamSplitter& bs,
                                 int limit = 8);

} // namespace fockprep
