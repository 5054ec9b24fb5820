// Copyright 2026 The Jumpcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jumpcode/capacity.hpp"
#include "jumpcode/code_families.hpp"
#include "jumpcode/jump_code.hpp"
#include "jumpcode/report_io.hpp"
#include "jumpcode/simulate.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

int run_capacity_sweep(double gamma_min, double gamma_max, std::size_t steps,
                       const std::string& out) {
    auto [quantum, classical] = jumpcode::sweep_curves(gamma_min, gamma_max, steps);
    if (out == "-")
        jumpcode::emit_curves(quantum, classical, std::cout);
    else
        jumpcode::emit_curves(quantum, classical, out);
    return exit_ok;
}

int run_channel_check_cmd(const jumpcode::TrialPlan& plan, bool timing) {
    const jumpcode::ChannelCheckReport check = jumpcode::run_channel_check(plan);
    jumpcode::emit_report(jumpcode::channel_check_to_json(check, timing), std::cout);
    std::cerr << "# wall time: " << check.report.wall_time_seconds << " s\n";
    return check.pass ? exit_ok : exit_check_failed;
}

int run_kl_check(const std::string& code_name, std::int64_t forced_t, double tolerance) {
    jumpcode::BinaryLinearCode code = jumpcode::make_family(code_name);
    if (!code.distance.has_value()) code.distance = jumpcode::compute_distance(code);
    jumpcode::JumpCode qc = jumpcode::lift(code);
    if (forced_t >= 0) qc.t = static_cast<std::size_t>(forced_t);
    const jumpcode::KLReport report = jumpcode::verify_kl(qc, tolerance);

    nlohmann::ordered_json j;
    j["code"] = code_name;
    j["n"] = code.n;
    j["k"] = code.k;
    j["d"] = *code.distance;
    j["t"] = qc.t;
    j["tolerance"] = tolerance;
    j["max_violation"] = report.max_violation;
    j["pass"] = report.pass;
    jumpcode::emit_report(j, std::cout);
    return report.pass ? exit_ok : exit_check_failed;
}

int run_simulate(const jumpcode::TrialPlan& plan, bool timing) {
    const jumpcode::SimulationReport report = plan.mode == jumpcode::SimMode::quantum
                                                  ? jumpcode::run_quantum_sim(plan)
                                                  : jumpcode::run_classical_sim(plan);
    jumpcode::emit_report(jumpcode::report_to_json(report, timing), std::cout);
    std::cerr << "# wall time: " << report.wall_time_seconds << " s\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Detected-jump channel toolkit: capacities, codes, simulations"};
    app.require_subcommand(1);

    bool timing = false;
    app.add_flag("--timing", timing,
                 "emit measured wall time in reports (breaks byte-for-byte determinism)");

    // capacity sweep
    auto* capacity = app.add_subcommand("capacity", "capacity curves");
    capacity->require_subcommand(1);
    auto* sweep = capacity->add_subcommand("sweep", "sweep both capacities over gamma");
    double gamma_min = 0.0, gamma_max = 1.0;
    std::size_t steps = 101;
    std::string out_path;
    sweep->add_option("--gamma-min", gamma_min, "lower end of the gamma grid")->required();
    sweep->add_option("--gamma-max", gamma_max, "upper end of the gamma grid")->required();
    sweep->add_option("--steps", steps, "number of grid points")->required();
    sweep->add_option("--out", out_path, "output CSV path ('-' for stdout)")->required();

    // channel check
    auto* channel = app.add_subcommand("channel", "channel validation");
    channel->require_subcommand(1);
    auto* check = channel->add_subcommand(
        "check", "empirical transition matrix of the sampled channel vs the closed form");
    jumpcode::TrialPlan check_plan;
    check_plan.mode = jumpcode::SimMode::channel_check;
    check->add_option("--gamma", check_plan.gamma, "jump probability")->required();
    check->add_option("--trials", check_plan.trials, "number of samples")->required();
    check->add_option("--seed", check_plan.seed, "random seed")->required();
    check->add_option("--workers", check_plan.workers, "worker threads");

    // code kl-check
    auto* code_cmd = app.add_subcommand("code", "quantum code checks");
    code_cmd->require_subcommand(1);
    auto* kl = code_cmd->add_subcommand("kl-check",
                                        "error-correction conditions of the lifted code");
    std::string kl_code;
    std::int64_t kl_t = -1;
    double kl_tol = 1e-10;
    kl->add_option("--code", kl_code, "code family descriptor")->required();
    kl->add_option("--t", kl_t, "forced correction order (default d-1)");
    kl->add_option("--tolerance", kl_tol, "violation tolerance");

    // simulate classical|quantum
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo and exact simulations");
    simulate->require_subcommand(1);
    auto* classical = simulate->add_subcommand("classical", "frame errors over the channel");
    jumpcode::TrialPlan classical_plan;
    classical_plan.mode = jumpcode::SimMode::classical;
    std::string decoder_name = "exhaustive";
    std::string sampler_name = "closed-form";
    classical->add_option("--code", classical_plan.code, "code family descriptor")->required();
    classical->add_option("--gamma", classical_plan.gamma, "jump probability")->required();
    classical->add_option("--trials", classical_plan.trials, "number of frames")->required();
    classical->add_option("--seed", classical_plan.seed, "random seed")->required();
    classical->add_option("--decoder", decoder_name, "exhaustive|bp");
    classical->add_option("--sampler", sampler_name, "closed-form|quantum");
    classical->add_option("--workers", classical_plan.workers, "worker threads");
    classical->add_option("--bp-max-iters", classical_plan.bp_max_iters, "BP iteration cap");

    auto* quantum = simulate->add_subcommand("quantum", "exact entanglement infidelity");
    jumpcode::TrialPlan quantum_plan;
    quantum_plan.mode = jumpcode::SimMode::quantum;
    quantum->add_option("--code", quantum_plan.code, "code family descriptor")->required();
    quantum->add_option("--gamma", quantum_plan.gamma, "jump probability")->required();

    // ldpc demo
    auto* ldpc = app.add_subcommand("ldpc", "LDPC demonstrations");
    ldpc->require_subcommand(1);
    auto* demo = ldpc->add_subcommand("demo", "BP frame errors of a random regular LDPC code");
    std::size_t demo_n = 1024;
    double demo_rate = 0.5;
    jumpcode::TrialPlan demo_plan;
    demo_plan.mode = jumpcode::SimMode::classical;
    demo_plan.decoder = jumpcode::DecoderKind::bp;
    demo->add_option("--n", demo_n, "block length")->required();
    demo->add_option("--rate", demo_rate, "design rate (column weight fixed at 3)");
    demo->add_option("--gamma", demo_plan.gamma, "jump probability")->required();
    demo->add_option("--trials", demo_plan.trials, "number of frames")->required();
    demo->add_option("--seed", demo_plan.seed, "random seed")->required();
    demo->add_option("--workers", demo_plan.workers, "worker threads");
    demo->add_option("--bp-max-iters", demo_plan.bp_max_iters, "BP iteration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (sweep->parsed()) return run_capacity_sweep(gamma_min, gamma_max, steps, out_path);
        if (check->parsed()) return run_channel_check_cmd(check_plan, timing);
        if (kl->parsed()) return run_kl_check(kl_code, kl_t, kl_tol);
        if (classical->parsed()) {
            if (decoder_name == "exhaustive")
                classical_plan.decoder = jumpcode::DecoderKind::exhaustive;
            else if (decoder_name == "bp")
                classical_plan.decoder = jumpcode::DecoderKind::bp;
            else
                throw CLI::ValidationError("--decoder", "must be exhaustive or bp");
            if (sampler_name == "closed-form")
                classical_plan.sampler = jumpcode::SamplerKind::closed_form;
            else if (sampler_name == "quantum")
                classical_plan.sampler = jumpcode::SamplerKind::quantum;
            else
                throw CLI::ValidationError("--sampler", "must be closed-form or quantum");
            return run_simulate(classical_plan, timing);
        }
        if (quantum->parsed()) return run_simulate(quantum_plan, timing);
        if (demo->parsed()) {
            if (!(demo_rate > 0.0 && demo_rate < 1.0))
                throw CLI::ValidationError("--rate", "must lie in (0, 1)");
            const std::size_t col_wt = 3;
            const auto row_wt = static_cast<std::size_t>(
                std::llround(static_cast<double>(col_wt) / (1.0 - demo_rate)));
            demo_plan.code = "random_ldpc(" + std::to_string(demo_n) + "," +
                             std::to_string(row_wt) + "," + std::to_string(col_wt) + "," +
                             std::to_string(demo_plan.seed) + ")";
            return run_simulate(demo_plan, timing);
        }
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}
