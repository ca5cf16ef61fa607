#include "fockprep/io.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace fockprep::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_to_json(const Complex& z) {
    return ordered_json::array({z.real(), z.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected a complex number as [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

ordered_json complex_list_to_json(const std::vector<Complex>& v) {
    ordered_json arr = ordered_json::array();
    for (const Complex& z : v) arr.push_back(complex_to_json(z));
    return arr;
}

std::vector<Complex> complex_list_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(complex_from_json(e));
    return out;
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

} // namespace

TargetState parse_target(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("target file: ") + e.what());
    }
    const bool has_coeffs = j.contains("coeffs");
    const bool has_phase = j.contains("phase_state");
    if (has_coeffs == has_phase)
        throw std::invalid_argument(
            "target file: exactly one of \"coeffs\" or \"phase_state\" must be present");
    if (has_coeffs) return make_target(complex_list_from_json(j["coeffs"]));
    const auto& ps = j["phase_state"];
    if (!ps.contains("z") || !ps.contains("N"))
        throw std::invalid_argument("target file: phase_state needs \"z\" and \"N\"");
    if (!ps["N"].is_number_integer())
        throw std::invalid_argument("target file: N must be an integer");
    return phase_state({complex_from_json(ps["z"]), ps["N"].get<int>()});
}

std::string plan_to_json(const SynthesisPlan& plan) {
    ordered_json j;
    j["target"] = {{"coeffs", complex_list_to_json(plan.target.psi)}};
    j["T"] = complex_to_json(plan.bs.t);
    j["R"] = complex_to_json(plan.bs.r);
    j["betas"] = complex_list_to_json(plan.betas);
    j["alphas"] = complex_list_to_json(plan.alphas);
    ordered_json order = ordered_json::array();
    for (int idx : plan.root_order) order.push_back(idx + 1);
    j["order"] = order;
    return j.dump(2) + "\n";
}

SynthesisPlan plan_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("plan file: ") + e.what());
    }
    const TargetState target = make_target(complex_list_from_json(j.at("target").at("coeffs")));
    const BeamSplitter bs(complex_from_json(j.at("T")), complex_from_json(j.at("R")));
    std::vector<int> order;
    for (const auto& e : j.at("order")) order.push_back(e.get<int>() - 1);
    return SynthesisPlan{target, bs, complex_list_from_json(j.at("betas")),
                         complex_list_from_json(j.at("alphas")), order};
}

std::string breakdown_to_json(const ProbabilityBreakdown& b) {
    ordered_json j;
    j["method"] = "analytic";
    j["total_prob"] = b.total;
    j["stage_norms_sq"] = b.stage_norms_sq;
    ordered_json stages = ordered_json::array();
    for (size_t i = 0; i < b.stage_norms_sq.size(); ++i) {
        ordered_json stage;
        stage["k"] = i + 1;
        stage["gamma"] = complex_to_json(b.gammas[i]);
        stage["P_k_sq"] = b.stage_norms_sq[i];
        stage["conditional"] = b.conditionals[i];
        stages.push_back(stage);
    }
    j["stages"] = stages;
    return j.dump(2) + "\n";
}

std::string outcome_to_json(const SimOutcome& outcome) {
    ordered_json j;
    j["method"] = "simulate";
    j["total_prob"] = outcome.total_prob;
    j["stage_norms_sq"] = outcome.stage_norms_sq;
    j["fidelity"] = outcome.fidelity_with_target;
    j["cutoff_used"] = outcome.cutoff_used;
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepCurve& curve) {
    std::string out = "absT,prob\n";
    for (const SweepPoint& p : curve.samples) {
        out += fmt("%.11e", p.abs_t);
        out += ',';
        out += std::isnan(p.prob) ? "nan" : fmt("%.11e", p.prob);
        out += '\n';
    }
    return out;
}

std::string format_prob(double p) { return fmt("%.5e", p); }

std::string plan_table(const SynthesisPlan& plan, const ProbabilityBreakdown* b) {
    std::string out =
        "  k      |beta_k|  phi(beta_k)     |alpha_k| phi(alpha_k)         P_k^2\n";
    const int n = plan.stages();
    for (int k = 1; k <= n + 1; ++k) {
        char line[160];
        const Complex alpha = plan.alphas[k - 1];
        if (k <= n) {
            const Complex beta = plan.betas[k - 1];
            std::snprintf(line, sizeof(line), "%3d  %12.6f  %+11.6f  %12.6f  %+11.6f  %12s\n",
                          k, std::abs(beta), principal_phase(beta), std::abs(alpha),
                          principal_phase(alpha),
                          b != nullptr ? format_prob(b->stage_norms_sq[k - 1]).c_str() : "-");
        } else {
            std::snprintf(line, sizeof(line), "%3d  %12s  %11s  %12.6f  %+11.6f  %12s\n", k,
                          "-", "-", std::abs(alpha), principal_phase(alpha), "-");
        }
        out += line;
    }
    if (b != nullptr) {
        out += "P = ";
        out += format_prob(b->total);
        out += '\n';
    }
    return out;
}

} // namespace fockprep::io
