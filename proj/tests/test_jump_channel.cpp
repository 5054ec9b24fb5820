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

#include <array>
#include <cmath>
#include <gtest/gtest.h>

#include "jumpcode/jump_channel.hpp"
#include "jumpcode/kraus.hpp"
#include "test_helpers.hpp"

using namespace jumpcode;
using jumpcode::testing::cnot_record_to_system;
using jumpcode::testing::random_density;

TEST(BuildAdTest, EndpointsAndSquareRoots) {
    const LabeledKrausChannel noiseless = build_ad(0.0);
    EXPECT_LT(noiseless.branches()[0].op.max_abs_diff(ComplexMatrix::identity(2)), 1e-15);
    EXPECT_EQ(noiseless.branches()[1].op.max_abs(), 0.0);

    const LabeledKrausChannel full = build_ad(1.0);
    EXPECT_LT(full.branches()[0].op.max_abs_diff(
                  ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}})),
              1e-15);
    EXPECT_LT(full.branches()[1].op.max_abs_diff(
                  ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})),
              1e-15);

    const LabeledKrausChannel ch = build_ad(0.36);
    EXPECT_LT(ch.branches()[0].op.max_abs_diff(
                  ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.8}})),
              1e-15);
    EXPECT_LT(ch.branches()[1].op.max_abs_diff(
                  ComplexMatrix::from_rows({{0.0, 0.6}, {0.0, 0.0}})),
              1e-15);

    EXPECT_THROW(build_ad(-0.1), std::invalid_argument);
    EXPECT_THROW(build_ad(1.1), std::invalid_argument);
}

TEST(BuildDjTest, RecordsLabelTheBranches) {
    const LabeledKrausChannel ch = build_dj(0.36);
    EXPECT_EQ(ch.record_alphabet(), 2u);
    EXPECT_EQ(ch.branches()[0].record, 0u);
    EXPECT_EQ(ch.branches()[1].record, 1u);
}

TEST(BuildDjPrimedTest, DiagonalBranches) {
    const LabeledKrausChannel ch = build_dj_primed(0.36);
    EXPECT_LT(ch.branches()[0].op.max_abs_diff(
                  ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.8}})),
              1e-15);
    EXPECT_LT(ch.branches()[1].op.max_abs_diff(
                  ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 0.6}})),
              1e-15);

    const LabeledKrausChannel full = build_dj_primed(1.0);
    EXPECT_LT(full.branches()[1].op.max_abs_diff(
                  ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}})),
              1e-15);
}

TEST(BuildDjPrimedTest, JumpBranchErasesPlusState) {
    const double s = 1.0 / std::sqrt(2.0);
    for (double gamma : {0.05, 0.3, 0.77, 1.0}) {
        const LabeledKrausChannel ch = build_dj_primed(gamma);
        const std::vector<cplx> plus = {s, s};
        const std::vector<cplx> out = ch.branches()[1].op.apply(plus);
        EXPECT_NEAR(std::abs(out[0]), 0.0, 1e-15);
        EXPECT_NEAR(out[1].real(), std::sqrt(gamma / 2.0), 1e-14);
    }
}

// The two Kraus sets are conjugate by the record-controlled NOT: applying it
// to the labeled output of the detected channel reproduces the primed one on
// a spanning operator set, across the whole gamma range.
TEST(BuildDjPrimedTest, CnotConjugationAcrossGammaGrid) {
    const ComplexMatrix u = cnot_record_to_system();
    for (int step = 0; step <= 100; ++step) {
        const double gamma = static_cast<double>(step) / 100.0;
        const LabeledKrausChannel dj = build_dj(gamma);
        const LabeledKrausChannel primed = build_dj_primed(gamma);
        double worst = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                ComplexMatrix basis_op(2, 2);
                basis_op(i, j) = 1.0;
                const ComplexMatrix corrected =
                    u * apply_labeled_to_matrix(dj, basis_op) * u.adjoint();
                const ComplexMatrix expected = apply_labeled_to_matrix(primed, basis_op);
                worst = std::max(worst, corrected.max_abs_diff(expected));
            }
        EXPECT_LT(worst, 1e-12) << "gamma=" << gamma;
    }
}

TEST(ComplementaryTest, KnownOutputs) {
    RngStream rng(101);
    const DensityMatrix any = random_density(2, rng);
    const ComplexMatrix at_zero = complementary_to_matrix(build_dj(0.0), any.matrix());
    EXPECT_LT(at_zero.max_abs_diff(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}})), 1e-14);

    const DensityMatrix one = DensityMatrix::diagonal({0.0, 1.0});
    const ComplexMatrix at_03 = complementary_to_matrix(build_dj(0.3), one.matrix());
    EXPECT_LT(at_03.max_abs_diff(ComplexMatrix::from_rows({{0.7, 0.0}, {0.0, 0.3}})), 1e-14);

    const DensityMatrix zero = DensityMatrix::diagonal({1.0, 0.0});
    for (double gamma : {0.1, 0.5, 0.9}) {
        const ComplexMatrix out = complementary_to_matrix(build_dj(gamma), zero.matrix());
        EXPECT_LT(out.max_abs_diff(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}})), 1e-14);
    }
}

TEST(ComplementaryTest, CallableFormMatchesMatrixForm) {
    RngStream rng(103);
    const auto ch = build_dj(0.42);
    const auto comp = complementary(ch);
    const DensityMatrix rho = random_density(2, rng);
    EXPECT_LT(comp(rho).matrix().max_abs_diff(complementary_to_matrix(ch, rho.matrix())), 1e-15);
}

TEST(DegradabilityTest, HoldsAcrossGamma) {
    for (double gamma : {0.0, 0.5, 1.0, 0.123, 0.987}) {
        const DegradabilityReport report = verify_degradable(gamma);
        EXPECT_TRUE(report.pass) << "gamma=" << gamma;
        EXPECT_LT(report.max_deviation, 1e-10);
    }
}

TEST(ExtractXiTest, ClosedFormProbabilities) {
    const DiscreteChannel xi = extract_xi(0.5);
    EXPECT_NEAR(xi(0, xi_symbol::erasure), 0.25, 1e-15);  // pE = gamma/2
    const double pf = std::pow((1.0 - std::sqrt(0.5)) / 2.0, 2.0);
    EXPECT_NEAR(xi(0, 1), pf, 1e-15);
    EXPECT_NEAR(pf, 0.0214466, 1e-7);

    const DiscreteChannel noiseless = extract_xi(0.0);
    EXPECT_EQ(noiseless(0, 0), 1.0);
    EXPECT_EQ(noiseless(0, 1), 0.0);
    EXPECT_EQ(noiseless(0, xi_symbol::erasure), 0.0);
}

TEST(ExtractXiTest, RowsNormalizedAndSymmetric) {
    for (int step = 0; step <= 100; ++step) {
        const double gamma = static_cast<double>(step) / 100.0;
        const DiscreteChannel xi = extract_xi(gamma);
        for (std::size_t x = 0; x < 2; ++x) {
            double row = 0.0;
            for (std::size_t y = 0; y < 3; ++y) row += xi(x, y);
            EXPECT_NEAR(row, 1.0, 1e-12);
        }
        // Symmetry is exact by construction.
        EXPECT_EQ(xi(0, 1), xi(1, 0));
        EXPECT_EQ(xi(0, xi_symbol::erasure), xi(1, xi_symbol::erasure));
        EXPECT_LE(xi_erasure_probability(gamma) + xi_flip_probability(gamma), 1.0);
    }
}

TEST(ExtractXiTest, SmallGammaExpansion) {
    // pF = gamma^2/16 + gamma^3/32 + ..., so the remainder constant is ~1/32.
    for (double gamma : {1e-2, 1e-3}) {
        const double pf = xi_flip_probability(gamma);
        EXPECT_LE(std::abs(pf - gamma * gamma / 16.0), 0.04 * gamma * gamma * gamma);
    }
}

TEST(SampleXiTest, NoiselessChannelIsIdentity) {
    RngStream rng = RngStream::for_trial(5, 0);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_EQ(sample_xi_quantum(0.0, 0, rng), xi_symbol::zero);
        EXPECT_EQ(sample_xi_quantum(0.0, 1, rng), xi_symbol::one);
    }
}

TEST(SampleXiTest, FullDampingDistribution) {
    // gamma = 1: E w.p. 1/2, flip w.p. 1/4, same w.p. 1/4.
    RngStream rng = RngStream::for_trial(6, 0);
    const int trials = 100000;
    std::array<int, 3> counts{};
    for (int i = 0; i < trials; ++i) ++counts[sample_xi_quantum(1.0, 0, rng)];
    const double n = trials;
    EXPECT_NEAR(counts[xi_symbol::erasure] / n, 0.5, 5.0 * std::sqrt(0.25 / n));
    EXPECT_NEAR(counts[1] / n, 0.25, 5.0 * std::sqrt(0.1875 / n));
    EXPECT_NEAR(counts[0] / n, 0.25, 5.0 * std::sqrt(0.1875 / n));
}

TEST(SampleXiTest, MatchesClosedFormAtModerateGamma) {
    const double gamma = 0.3;
    const DiscreteChannel xi = extract_xi(gamma);
    const int trials = 100000;
    for (int bit = 0; bit < 2; ++bit) {
        std::array<int, 3> counts{};
        RngStream rng = RngStream::for_trial(7, static_cast<std::uint64_t>(bit));
        for (int i = 0; i < trials; ++i)
            ++counts[sample_xi_quantum(gamma, bit, rng)];
        for (std::size_t y = 0; y < 3; ++y) {
            const double p = xi(static_cast<std::size_t>(bit), y);
            const double sigma = std::sqrt(p * (1.0 - p) / trials);
            EXPECT_NEAR(counts[y] / static_cast<double>(trials), p, 5.0 * sigma);
        }
    }
}

TEST(LabeledOutputTest, KnownStates) {
    RngStream rng(107);
    const DensityMatrix rho = random_density(2, rng);

    // gamma = 0: rho ⊗ |0><0|.
    const ComplexMatrix quiet = apply_labeled_to_matrix(build_dj(0.0), rho.matrix());
    ComplexMatrix expected(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) expected(i * 2, j * 2) = rho.matrix()(i, j);
    EXPECT_LT(quiet.max_abs_diff(expected), 1e-14);

    // gamma = 1 on |1><1|: |0><0| ⊗ |1><1|.
    const DensityMatrix one = DensityMatrix::diagonal({0.0, 1.0});
    const ComplexMatrix certain = apply_labeled_to_matrix(build_dj(1.0), one.matrix());
    ComplexMatrix expected_jump(4, 4);
    expected_jump(1, 1) = 1.0;
    EXPECT_LT(certain.max_abs_diff(expected_jump), 1e-14);

    // gamma = 0.3 on |1><1|: 0.7 |1><1|⊗|0><0| + 0.3 |0><0|⊗|1><1|.
    const ComplexMatrix mixed = apply_labeled_to_matrix(build_dj(0.3), one.matrix());
    ComplexMatrix expected_mixed(4, 4);
    expected_mixed(2, 2) = 0.7;
    expected_mixed(1, 1) = 0.3;
    EXPECT_LT(mixed.max_abs_diff(expected_mixed), 1e-14);

    // Tracing out the system leaves the record distribution diag(0.7, 0.3).
    const ComplexMatrix aux = partial_trace_matrix(mixed, {2, 2}, {1});
    EXPECT_LT(aux.max_abs_diff(ComplexMatrix::from_rows({{0.7, 0.0}, {0.0, 0.3}})), 1e-14);
}

TEST(AdChannelTest, HandEvaluatedOutputs) {
    const DensityMatrix one = DensityMatrix::diagonal({0.0, 1.0});
    const DensityMatrix decayed = apply_channel(build_ad(1.0), one);
    EXPECT_LT(decayed.matrix().max_abs_diff(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}})),
              1e-14);

    const double s = 1.0 / std::sqrt(2.0);
    const DensityMatrix plus = DensityMatrix::pure({s, s});
    const DensityMatrix out = apply_channel(build_ad(0.5), plus);
    const double off = std::sqrt(0.5) / 2.0;
    const ComplexMatrix expected =
        ComplexMatrix::from_rows({{0.75, off}, {off, 0.25}});
    EXPECT_LT(out.matrix().max_abs_diff(expected), 1e-14);
}
