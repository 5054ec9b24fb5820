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

#ifndef JUMPCODE_JUMP_CHANNEL_HPP
#define JUMPCODE_JUMP_CHANNEL_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jumpcode/complex_matrix.hpp"
#include "jumpcode/density_matrix.hpp"
#include "jumpcode/discrete_channel.hpp"
#include "jumpcode/kraus.hpp"
#include "jumpcode/rng.hpp"

namespace jumpcode {

/// Jump probability per channel use.
struct JumpParams {
    double gamma;

    explicit JumpParams(double g) : gamma(g) {
        if (!(g >= 0.0 && g <= 1.0)) throw std::invalid_argument("gamma must lie in [0, 1]");
    }
};

namespace xi_symbol {
inline constexpr std::size_t zero = 0;
inline constexpr std::size_t one = 1;
inline constexpr std::size_t erasure = 2;
}  // namespace xi_symbol

inline ComplexMatrix damping_no_jump(double gamma) {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}});
}

inline ComplexMatrix damping_jump(double gamma) {
    return ComplexMatrix::from_rows({{0.0, std::sqrt(gamma)}, {0.0, 0.0}});
}

/// Amplitude damping channel: decay |1⟩→|0⟩ with probability gamma.
/// Record symbols are attached but carry no meaning for this channel.
inline LabeledKrausChannel build_ad(double gamma) {
    JumpParams params(gamma);
    std::vector<KrausBranch> branches;
    branches.push_back({damping_no_jump(params.gamma), 0});
    branches.push_back({damping_jump(params.gamma), 1});
    return LabeledKrausChannel(2, 2, 2, std::move(branches));
}

/// Detected-jump channel: amplitude damping whose decay event is flagged in
/// the record register (record = branch index).
inline LabeledKrausChannel build_dj(double gamma) { return build_ad(gamma); }

/// Detected-jump channel after the record-controlled NOT correction; both
/// Kraus operators are diagonal, so the channel is classical in the
/// Hadamard basis.
inline LabeledKrausChannel build_dj_primed(double gamma) {
    JumpParams params(gamma);
    std::vector<KrausBranch> branches;
    branches.push_back({damping_no_jump(params.gamma), 0});
    branches.push_back(
        {ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, std::sqrt(params.gamma)}}), 1});
    return LabeledKrausChannel(2, 2, 2, std::move(branches));
}

struct DegradabilityReport {
    bool pass = false;
    double max_deviation = 0.0;
};

/// Checks the degrading identity: tracing the system out of the labeled
/// output reproduces the complementary channel. By linearity the check runs
/// over the complete operator basis |i⟩⟨j|, which proves the identity at
/// machine precision.
inline DegradabilityReport verify_degradable(double gamma, double tolerance = 1e-10) {
    const LabeledKrausChannel ch = build_dj(gamma);
    const std::size_t d = ch.input_dim();
    DegradabilityReport report;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            ComplexMatrix basis_op(d, d);
            basis_op(i, j) = 1.0;
            const ComplexMatrix labeled = apply_labeled_to_matrix(ch, basis_op);
            const ComplexMatrix degraded = partial_trace_matrix(
                labeled, {ch.output_dim(), ch.record_alphabet()}, {1});
            const ComplexMatrix comp = complementary_to_matrix(ch, basis_op);
            report.max_deviation = std::max(report.max_deviation, degraded.max_abs_diff(comp));
        }
    }
    report.pass = report.max_deviation < tolerance;
    return report;
}

inline double xi_erasure_probability(double gamma) { return gamma / 2.0; }

inline double xi_flip_probability(double gamma) {
    const double h = 0.5 * (1.0 - std::sqrt(1.0 - gamma));
    return h * h;
}

/// The binary classical channel simulated by the detected-jump channel in
/// the Hadamard basis: inputs {0 ≡ |+⟩, 1 ≡ |−⟩}, outputs {0, 1, E} with the
/// erasure symbol at output index 2. P(E|x) = gamma/2 and
/// P(flip|x) = ((1 - sqrt(1-gamma))/2)^2, identically for both inputs.
inline DiscreteChannel extract_xi(double gamma) {
    JumpParams params(gamma);
    const double pe = xi_erasure_probability(params.gamma);
    const double pf = xi_flip_probability(params.gamma);
    const double ps = 1.0 - pe - pf;
    return DiscreteChannel(2, 3,
                           {ps, pf, pe,    // from input 0
                            pf, ps, pe});  // from input 1
}

/// One use of the primed detected-jump channel on |+⟩ or |−⟩, sampled in two
/// genuine Born stages: first the Kraus branch (its record is the detector
/// click), then the Hadamard-basis measurement of the post-branch state.
/// Returns 0, 1, or xi_symbol::erasure.
inline std::size_t sample_xi_quantum(double gamma, int input_bit, RngStream& rng) {
    JumpParams params(gamma);
    if (input_bit != 0 && input_bit != 1)
        throw std::invalid_argument("sample_xi_quantum: input bit must be 0 or 1");

    const LabeledKrausChannel ch = build_dj_primed(params.gamma);
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<cplx> in = {s, input_bit == 0 ? s : -s};

    std::vector<std::vector<cplx>> post;
    std::vector<double> weights;
    post.reserve(ch.branches().size());
    weights.reserve(ch.branches().size());
    for (const auto& b : ch.branches()) {
        std::vector<cplx> v = b.op.apply(in);
        double w = 0.0;
        for (const auto& amp : v) w += std::norm(amp);
        post.push_back(std::move(v));
        weights.push_back(w);
    }

    const std::size_t branch = rng.sample_discrete(weights);
    if (ch.branches()[branch].record == 1) return xi_symbol::erasure;

    const auto& phi = post[branch];
    const cplx amp_plus = s * (phi[0] + phi[1]);
    const cplx amp_minus = s * (phi[0] - phi[1]);
    const std::array<double, 2> meas = {std::norm(amp_plus), std::norm(amp_minus)};
    return rng.sample_discrete(std::span<const double>(meas.data(), meas.size()));
}

}  // namespace jumpcode

#endif  // JUMPCODE_JUMP_CHANNEL_HPP
