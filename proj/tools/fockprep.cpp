// fockprep: compile Fock-superposition targets into displacement /
// photon-add schedules and evaluate their success probability.
//
// Exit codes: 0 ok, 2 parse error, 3 compile failure, 4 analytic/simulated
// disagreement in `prob --method both`, 5 stagewise validation failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fockprep/io.hpp"
#include "fockprep/probability.hpp"
#include "fockprep/search.hpp"
#include "fockprep/simulator.hpp"

namespace {

using fockprep::BeamSplitter;
using fockprep::Complex;
using fockprep::TargetState;

constexpr int kExitParse = 2;
constexpr int kExitCompile = 3;
constexpr int kExitInconsistent = 4;
constexpr int kExitValidation = 5;

TargetState load_target(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open target file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return fockprep::io::parse_target(buf.str());
}

std::vector<int> parse_order(const std::string& spec) {
    if (spec.empty() || spec == "canonical") return {};
    std::vector<int> order;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        const int idx = std::stoi(item, &used);
        if (used != item.size() || idx < 1)
            throw std::invalid_argument("--order: expected 1-based indices like 3,1,2");
        order.push_back(idx - 1);
    }
    return order;
}

BeamSplitter make_bs(double abs_t, double phase_t) {
    if (!(abs_t > 0.0 && abs_t < 1.0))
        throw std::invalid_argument("--T must lie in (0, 1)");
    return BeamSplitter::from_transmittance(std::polar(abs_t, phase_t));
}

int cmd_plan(const std::string& file, double abs_t, double phase_t, const std::string& order) {
    TargetState target;
    std::vector<int> perm;
    BeamSplitter bs = BeamSplitter::from_transmittance(Complex(0.5));
    try {
        target = load_target(file);
        perm = parse_order(order);
        bs = make_bs(abs_t, phase_t);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fockprep plan: %s\n", e.what());
        return kExitParse;
    }
    try {
        const auto plan = fockprep::compile(target, bs, perm);
        const auto b = fockprep::breakdown(plan);
        std::fputs(fockprep::io::plan_table(plan, &b).c_str(), stdout);
        std::fputs(fockprep::io::plan_to_json(plan).c_str(), stdout);
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fockprep plan: %s\n", e.what());
        return kExitCompile;
    }
}

int cmd_prob(const std::string& file, double abs_t, double phase_t, const std::string& order,
             const std::string& method) {
    TargetState target;
    std::vector<int> perm;
    BeamSplitter bs = BeamSplitter::from_transmittance(Complex(0.5));
    try {
        target = load_target(file);
        perm = parse_order(order);
        bs = make_bs(abs_t, phase_t);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fockprep prob: %s\n", e.what());
        return kExitParse;
    }
    try {
        const auto plan = fockprep::compile(target, bs, perm);
        if (method == "analytic") {
            const auto b = fockprep::breakdown(plan);
            std::fputs(fockprep::io::plan_table(plan, &b).c_str(), stdout);
            std::fputs(fockprep::io::breakdown_to_json(b).c_str(), stdout);
            return 0;
        }
        if (method == "simulate") {
            const auto sim = fockprep::run_plan(plan);
            std::fputs(fockprep::io::outcome_to_json(sim).c_str(), stdout);
            return 0;
        }
        const auto b = fockprep::breakdown(plan);
        const auto sim = fockprep::run_plan(plan);
        std::fputs(fockprep::io::breakdown_to_json(b).c_str(), stdout);
        std::fputs(fockprep::io::outcome_to_json(sim).c_str(), stdout);
        const double rel = plan.stages() == 0
                               ? 0.0
                               : std::abs(sim.total_prob - b.total) / b.total;
        std::printf("analytic  = %s\n", fockprep::io::format_prob(b.total).c_str());
        std::printf("simulated = %s\n", fockprep::io::format_prob(sim.total_prob).c_str());
        std::printf("relative difference = %.3e\n", rel);
        if (rel > 1e-6) {
            std::fprintf(stderr, "fockprep prob: analytic and simulated totals disagree\n");
            return kExitInconsistent;
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fockprep prob: %s\n", e.what());
        return kExitCompile;
    }
}

int cmd_sweep(const std::string& file, double min_t, double max_t, double step,
              double phase_t) {
    TargetState target;
    try {
        target = load_target(file);
        if (!(min_t > 0.0 && min_t < max_t && max_t < 1.0 && step > 0.0))
            throw std::invalid_argument("need 0 < min < max < 1 and step > 0");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fockprep sweep: %s\n", e.what());
        return kExitParse;
    }
    try {
        // index-based grid so halving the step reproduces shared points exactly
        const long count = static_cast<long>(std::floor((max_t - min_t) / step + 1e-9)) + 1;
        std::vector<double> grid;
        grid.reserve(count);
        for (long i = 0; i < count; ++i) grid.push_back(min_t + static_cast<double>(i) * step);
        auto curve = fockprep::sweep_T(target, grid, phase_t);
        curve.target_id = file;
        std::fputs(fockprep::io::sweep_to_csv(curve).c_str(), stdout);
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fockprep sweep: %s\n", e.what());
        return kExitCompile;
    }
}

int cmd_optimize(const std::string& file, const std::string& mode, double abs_t,
                 double bracket_lo, double bracket_hi, int iters, int limit) {
    TargetState target;
    try {
        target = load_target(file);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fockprep optimize: %s\n", e.what());
        return kExitParse;
    }
    try {
        const auto baseline_plan = fockprep::compile(target, make_bs(abs_t, 0.0));
        const double baseline = fockprep::breakdown(baseline_plan).total;
        if (mode == "common") {
            const auto opt = fockprep::optimize_common_T(target, {bracket_lo, bracket_hi});
            std::printf("{\n  \"mode\": \"common\",\n  \"baseline_T\": %.10g,\n"
                        "  \"baseline_P\": %.12e,\n  \"best_T\": %.10g,\n"
                        "  \"best_P\": %.12e\n}\n",
                        abs_t, baseline, opt.best_t, opt.best_p);
            return 0;
        }
        if (mode == "order") {
            const auto opt = fockprep::optimize_root_order(target, make_bs(abs_t, 0.0), limit);
            std::string order = "[";
            for (size_t i = 0; i < opt.order.size(); ++i) {
                order += std::to_string(opt.order[i] + 1);
                if (i + 1 < opt.order.size()) order += ", ";
            }
            order += "]";
            std::printf("{\n  \"mode\": \"order\",\n  \"baseline_P\": %.12e,\n"
                        "  \"best_order\": %s,\n  \"best_P\": %.12e,\n"
                        "  \"improvement\": %.6f\n}\n",
                        baseline, order.c_str(), opt.best_p, opt.best_p / baseline);
            return 0;
        }
        // stagewise
        const auto cfg = fockprep::optimize_stagewise(target, abs_t, iters);
        std::string ts = "[";
        for (size_t i = 0; i < cfg.ts.size(); ++i) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.10g", cfg.ts[i].real());
            ts += buf;
            if (i + 1 < cfg.ts.size()) ts += ", ";
        }
        ts += "]";
        std::printf("{\n  \"mode\": \"stagewise\",\n  \"baseline_P\": %.12e,\n"
                    "  \"best_T\": %s,\n  \"best_P\": %.12e,\n"
                    "  \"improvement\": %.6f\n}\n",
                    baseline, ts.c_str(), cfg.prob, cfg.prob / baseline);
        return 0;
    } catch (const fockprep::ValidationFailure& e) {
        std::fprintf(stderr, "fockprep optimize: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fockprep optimize: %s\n", e.what());
        return kExitCompile;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compiler and verifier for single-mode optical state preparation"};
    app.require_subcommand(1);

    std::string file, order = "canonical", method = "both", mode = "common";
    double abs_t = 0.99, phase_t = 0.0;
    double min_t = 0.5, max_t = 0.999, step = 0.001;
    double bracket_lo = 0.5, bracket_hi = 0.999;
    int iters = 4, limit = 8;

    auto* plan = app.add_subcommand("plan", "compile a target into a plan");
    plan->add_option("target-file", file)->required();
    plan->add_option("--T", abs_t, "beam-splitter |T|");
    plan->add_option("--T-phase", phase_t, "phase of T in radians");
    plan->add_option("--order", order, "1-based root order, e.g. 3,1,2 (or canonical)");

    auto* prob = app.add_subcommand("prob", "success probability of a compiled plan");
    prob->add_option("target-file", file)->required();
    prob->add_option("--T", abs_t);
    prob->add_option("--T-phase", phase_t);
    prob->add_option("--order", order);
    prob->add_option("--method", method)
        ->check(CLI::IsMember({"analytic", "simulate", "both"}));

    auto* sweep = app.add_subcommand("sweep", "probability vs |T| as CSV");
    sweep->add_option("target-file", file)->required();
    sweep->add_option("--min", min_t);
    sweep->add_option("--max", max_t);
    sweep->add_option("--step", step);
    sweep->add_option("--T-phase", phase_t);

    auto* optimize = app.add_subcommand("optimize", "search for better parameters");
    optimize->add_option("target-file", file)->required();
    optimize->add_option("--mode", mode)
        ->check(CLI::IsMember({"common", "stagewise", "order"}));
    optimize->add_option("--T", abs_t, "baseline T (and stagewise init)");
    optimize->add_option("--bracket-lo", bracket_lo);
    optimize->add_option("--bracket-hi", bracket_hi);
    optimize->add_option("--iters", iters);
    optimize->add_option("--limit", limit, "max N for exhaustive order search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitParse;
    }

    if (plan->parsed()) return cmd_plan(file, abs_t, phase_t, order);
    if (prob->parsed()) return cmd_prob(file, abs_t, phase_t, order, method);
    if (sweep->parsed()) return cmd_sweep(file, min_t, max_t, step, phase_t);
    return cmd_optimize(file, mode, abs_t, bracket_lo, bracket_hi, iters, limit);
}
