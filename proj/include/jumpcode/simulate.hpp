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

#ifndef JUMPCODE_SIMULATE_HPP
#define JUMPCODE_SIMULATE_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "jumpcode/code_families.hpp"
#include "jumpcode/jump_channel.hpp"
#include "jumpcode/jump_code.hpp"
#include "jumpcode/ldpc.hpp"
#include "jumpcode/linear_code.hpp"
#include "jumpcode/rng.hpp"

namespace jumpcode {

enum class SimMode { classical, quantum, channel_check };
enum class DecoderKind { exhaustive, bp };
enum class SamplerKind { closed_form, quantum };

inline std::string to_string(SimMode m) {
    switch (m) {
        case SimMode::classical: return "classical";
        case SimMode::quantum: return "quantum";
        case SimMode::channel_check: return "channel-check";
    }
    return "?";
}

inline std::string to_string(DecoderKind d) {
    return d == DecoderKind::exhaustive ? "exhaustive" : "bp";
}

inline std::string to_string(SamplerKind s) {
    return s == SamplerKind::closed_form ? "closed-form" : "quantum";
}

struct TrialPlan {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1;
    double gamma = 0.0;
    std::string code = "repetition(3)";
    SimMode mode = SimMode::classical;
    DecoderKind decoder = DecoderKind::exhaustive;
    SamplerKind sampler = SamplerKind::closed_form;
    std::size_t workers = 1;
    std::size_t bp_max_iters = 60;

    void validate() const {
        if (trials < 1) throw std::invalid_argument("plan: trials must be at least 1");
        if (workers < 1) throw std::invalid_argument("plan: workers must be at least 1");
        JumpParams check(gamma);
    }
};

struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval for a binomial proportion (95% by default).
inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                      double z = 1.959963984540054) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: zero trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {center - half, center + half};
}

struct SimulationReport {
    TrialPlan plan;
    std::uint64_t failures = 0;
    double failure_rate = 0.0;
    WilsonInterval wilson_95_interval;
    double wall_time_seconds = 0.0;
};

struct ChannelCheckReport {
    SimulationReport report;
    std::array<std::array<std::uint64_t, 3>, 2> counts{};     // [input][symbol]
    std::array<std::array<double, 3>, 2> empirical{};         // frequencies
    std::array<std::array<double, 3>, 2> expected{};          // closed form
    std::array<std::uint64_t, 2> inputs_seen{};
    std::size_t violating_cells = 0;
    bool pass = false;
};

namespace detail {

/// Runs fn(trial_index) over [0, trials) on `workers` threads. Each trial's
/// randomness comes from RngStream::for_trial, so the partition has no
/// effect on results; per-worker partial results are merged in worker order.
template <typename State, typename PerTrial>
std::vector<State> run_partitioned(std::uint64_t trials, std::size_t workers, PerTrial fn) {
    workers = std::max<std::size_t>(1, std::min<std::size_t>(workers, trials));
    std::vector<State> states(workers);
    if (workers == 1) {
        for (std::uint64_t i = 0; i < trials; ++i) fn(states[0], i);
        return states;
    }
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min<std::uint64_t>(trials, lo + chunk);
        pool.emplace_back([&, w, lo, hi]() {
            for (std::uint64_t i = lo; i < hi; ++i) fn(states[w], i);
        });
    }
    for (auto& th : pool) th.join();
    return states;
}

/// Samples one use of the erasure+flip channel from its closed-form row.
inline std::size_t sample_xi_closed_form(double pe, double pf, int bit, RngStream& rng) {
    const double u = rng.next_double();
    if (u < pe) return xi_symbol::erasure;
    if (u < pe + pf) return static_cast<std::size_t>(1 - bit);
    return static_cast<std::size_t>(bit);
}

}  // namespace detail

/// Monte Carlo frame-error simulation of a code over the erasure+flip
/// channel: encode a random message, push every coordinate through the
/// channel sampler, decode, and count a failure whenever the decoded word is
/// not the transmitted one. Deterministic given (seed, trials) regardless of
/// the worker count.
inline SimulationReport run_classical_sim(const TrialPlan& plan) {
    plan.validate();
    if (plan.mode != SimMode::classical)
        throw std::invalid_argument("run_classical_sim: plan mode is not classical");
    const BinaryLinearCode code = make_family(plan.code);
    if (plan.decoder == DecoderKind::exhaustive && code.k > 20)
        throw std::invalid_argument("run_classical_sim: code too large for exhaustive decoding");

    const BpDecoder* bp = nullptr;
    BpDecoder bp_storage = BpDecoder(code);
    if (plan.decoder == DecoderKind::bp) bp = &bp_storage;

    const double pe = xi_erasure_probability(plan.gamma);
    const double pf = xi_flip_probability(plan.gamma);

    const auto t0 = std::chrono::steady_clock::now();
    struct State {
        std::uint64_t failures = 0;
    };
    auto states = detail::run_partitioned<State>(
        plan.trials, plan.workers, [&](State& st, std::uint64_t trial) {
            RngStream rng = RngStream::for_trial(plan.seed, trial);
            BitVector message(code.k);
            for (std::size_t b = 0; b < code.k; ++b) message.set(b, rng.next_bit());
            const BitVector sent = encode(code, message);

            ReceivedWord received;
            received.symbols.resize(code.n);
            for (std::size_t i = 0; i < code.n; ++i) {
                const int bit = sent.get(i) ? 1 : 0;
                const std::size_t symbol =
                    plan.sampler == SamplerKind::quantum
                        ? sample_xi_quantum(plan.gamma, bit, rng)
                        : detail::sample_xi_closed_form(pe, pf, bit, rng);
                received.symbols[i] = static_cast<std::uint8_t>(symbol);
            }

            const DecodeResult result = bp ? bp->decode(received, plan.gamma, plan.bp_max_iters)
                                           : decode_erasure_flip(code, received);
            if (result.status != DecodeStatus::decoded || !(result.codeword == sent))
                ++st.failures;
        });
    const auto t1 = std::chrono::steady_clock::now();

    SimulationReport report;
    report.plan = plan;
    for (const auto& st : states) report.failures += st.failures;
    report.failure_rate =
        static_cast<double>(report.failures) / static_cast<double>(plan.trials);
    report.wilson_95_interval = wilson_interval(report.failures, plan.trials);
    report.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
    return report;
}

/// Exact (non-sampled) quantum-level run: delegates to
/// entanglement_infidelity and wraps the value in the report format.
inline SimulationReport run_quantum_sim(const TrialPlan& plan) {
    plan.validate();
    if (plan.mode != SimMode::quantum)
        throw std::invalid_argument("run_quantum_sim: plan mode is not quantum");
    const BinaryLinearCode code = make_family(plan.code);
    if (code.n > 7) throw std::invalid_argument("run_quantum_sim: n too large for exact sum");

    const auto t0 = std::chrono::steady_clock::now();
    const double infidelity = entanglement_infidelity(lift(code), plan.gamma);
    const auto t1 = std::chrono::steady_clock::now();

    SimulationReport report;
    report.plan = plan;
    report.plan.trials = 1;
    report.failures = 0;
    report.failure_rate = infidelity;
    report.wilson_95_interval = {infidelity, infidelity};
    report.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
    return report;
}

/// Empirical transition matrix of the sampled channel against the closed
/// form, with 5-sigma binomial bounds per cell. Trial i uses input bit
/// i mod 2, so both rows get trials/2 samples (up to rounding).
inline ChannelCheckReport run_channel_check(const TrialPlan& plan) {
    plan.validate();
    if (plan.mode != SimMode::channel_check)
        throw std::invalid_argument("run_channel_check: plan mode is not channel-check");

    const auto t0 = std::chrono::steady_clock::now();
    struct State {
        std::array<std::array<std::uint64_t, 3>, 2> counts{};
    };
    auto states = detail::run_partitioned<State>(
        plan.trials, plan.workers, [&](State& st, std::uint64_t trial) {
            RngStream rng = RngStream::for_trial(plan.seed, trial);
            const int bit = static_cast<int>(trial & 1);
            const std::size_t symbol = sample_xi_quantum(plan.gamma, bit, rng);
            ++st.counts[static_cast<std::size_t>(bit)][symbol];
        });
    const auto t1 = std::chrono::steady_clock::now();

    ChannelCheckReport check;
    for (const auto& st : states)
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 3; ++y) check.counts[x][y] += st.counts[x][y];
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 3; ++y) check.inputs_seen[x] += check.counts[x][y];

    const DiscreteChannel xi = extract_xi(plan.gamma);
    for (std::size_t x = 0; x < 2; ++x) {
        const double n = static_cast<double>(check.inputs_seen[x]);
        for (std::size_t y = 0; y < 3; ++y) {
            const double p = xi(x, y);
            const double freq = n > 0.0 ? static_cast<double>(check.counts[x][y]) / n : 0.0;
            check.expected[x][y] = p;
            check.empirical[x][y] = freq;
            if (n == 0.0) continue;  // an unsampled row carries no evidence
            const double sigma = std::sqrt(p * (1.0 - p) / n);
            if (std::abs(freq - p) > 5.0 * sigma) ++check.violating_cells;
        }
    }
    check.pass = check.violating_cells == 0;

    check.report.plan = plan;
    check.report.failures = check.violating_cells;
    check.report.failure_rate =
        static_cast<double>(check.violating_cells) / static_cast<double>(plan.trials);
    check.report.wilson_95_interval = wilson_interval(check.violating_cells, plan.trials);
    check.report.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
    return check;
}

}  // namespace jumpcode

#endif  // JUMPCODE_SIMULATE_HPP
