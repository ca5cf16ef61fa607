#pragma once

#include <string>

#include "fockprep/probability.hpp"
#include "fockprep/search.hpp"
#include "fockprep/simulator.hpp"
#include "fockprep/synthesis.hpp"

namespace fockprep::io {

/// Target description file: either {"coeffs": [[re,im], ...]} or
/// {"phase_state": {"z": [re,im], "N": n}}, exactly one of the two.
TargetState parse_target(const std::string& json_text);

/// Plan document with fields in this order: target, T, R, betas, alphas,
/// order; complex numbers as [re, im] pairs, order 1-based.
std::string plan_to_json(const SynthesisPlan& plan);
SynthesisPlan plan_from_json(const std::string& json_text);

/// {"method", "total_prob", "stage_norms_sq", "stages": [{k, gamma, P_k_sq,
/// conditional}, ...]}.
std::string breakdown_to_json(const ProbabilityBreakdown& b);

/// {"method", "total_prob", "stage_norms_sq", "fidelity", "cutoff_used"}.
std::string outcome_to_json(const SimOutcome& outcome);

/// CSV with header "absT,prob", 12 significant digits, nan for failed points.
std::string sweep_to_csv(const SweepCurve& curve);

/// Fixed-width table of |beta_k|, phi(beta_k), |alpha_k|, phi(alpha_k) and,
/// when a breakdown is supplied, the cumulative stage norms P_k^2.
std::string plan_table(const SynthesisPlan& plan, const ProbabilityBreakdown* b = nullptr);

/// Scientific notation with 6 significant digits (probabilities).
std::string format_prob(double p);

} // namespace fockprep::io
