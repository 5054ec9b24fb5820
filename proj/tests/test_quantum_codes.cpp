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

#include <cmath>
#include <gtest/gtest.h>
#include <vector>

#include "jumpcode/code_families.hpp"
#include "jumpcode/jump_code.hpp"
#include "test_helpers.hpp"

using namespace jumpcode;
using jumpcode::testing::loglog_slope;

namespace {

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

}  // namespace

TEST(LiftTest, RepetitionThree) {
    const JumpCode qc = lift(make_family("repetition(3)"));
    EXPECT_EQ(qc.n, 3u);
    EXPECT_EQ(qc.dim, 8u);
    EXPECT_EQ(qc.t, 2u);
    ASSERT_EQ(qc.basis_states.size(), 2u);

    // Basis states are H^{⊗3}|000> and H^{⊗3}|111>.
    const ComplexMatrix h3 = hadamard_n(3);
    for (std::size_t b = 0; b < 2; ++b) {
        std::vector<cplx> word(8, cplx(0.0, 0.0));
        word[b == 0 ? 0 : 7] = 1.0;
        const std::vector<cplx> expected = h3.apply(word);
        for (std::size_t y = 0; y < 8; ++y)
            EXPECT_NEAR(std::abs(qc.basis_states[b][y] - expected[y]), 0.0, 1e-14);
    }
}

TEST(LiftTest, BasisOrthonormal) {
    for (const char* name : {"repetition(3)", "repetition(5)", "hamming74"}) {
        const JumpCode qc = lift(make_family(name));
        const std::size_t count = qc.basis_states.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                const cplx g = inner(qc.basis_states[i], qc.basis_states[j]);
                EXPECT_NEAR(std::abs(g - (i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0))), 0.0, 1e-12)
                    << name;
            }
    }
}

TEST(LiftTest, TrivialZeroCodeIsUniformSuperposition) {
    // k = 0 code containing only the zero word; distance set by hand.
    BinaryLinearCode zero_code(3, 0, BitMatrix(0, 3), BitMatrix::identity(3), 3);
    const JumpCode qc = lift(zero_code);
    ASSERT_EQ(qc.basis_states.size(), 1u);
    const double amp = 1.0 / std::sqrt(8.0);
    for (const cplx& a : qc.basis_states[0]) EXPECT_NEAR(std::abs(a - cplx(amp, 0.0)), 0.0, 1e-15);
}

TEST(LiftTest, SizeLimit) {
    EXPECT_THROW(lift(make_family("repetition(11)")), std::invalid_argument);
}

TEST(ErrorOperatorTest, SmallCases) {
    EXPECT_EQ(error_operator(ErrorPattern{}, 2).max_abs_diff(ComplexMatrix::identity(4)), 0.0);

    const ComplexMatrix a = error_operator(ErrorPattern{{0}, {}}, 1);
    EXPECT_EQ(a.max_abs_diff(ComplexMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}})), 0.0);

    const ComplexMatrix b = error_operator(ErrorPattern{{}, {0}}, 1);
    EXPECT_EQ(b.max_abs_diff(ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 2.0}})), 0.0);

    EXPECT_THROW(error_operator(ErrorPattern{{2}, {}}, 2), std::invalid_argument);
    EXPECT_THROW(error_operator(ErrorPattern{{0}, {0}}, 2), std::invalid_argument);
}

TEST(ErrorOperatorTest, FastApplicationMatchesDense) {
    RngStream rng(5);
    const std::size_t n = 4, dim = 16;
    const ErrorPattern pattern{{1, 3}, {0}};
    const ComplexMatrix dense = error_operator(pattern, n);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<cplx> state(dim);
        for (auto& amp : state)
            amp = cplx(jumpcode::testing::gaussian(rng), jumpcode::testing::gaussian(rng));
        const std::vector<cplx> expected = dense.apply(state);
        const std::vector<cplx> fast = apply_error_pattern(pattern, state, n);
        for (std::size_t i = 0; i < dim; ++i)
            EXPECT_NEAR(std::abs(expected[i] - fast[i]), 0.0, 1e-12);
    }
}

TEST(ErrorSetTest, Counts) {
    EXPECT_EQ(order_t_error_set(3, 0).size(), 1u);
    // identity + 3 single-A + 3 single-B + 3 double-A
    EXPECT_EQ(order_t_error_set(3, 2).size(), 10u);
    EXPECT_EQ(order_t_error_set(1, 1).size(), 2u);

    for (const ErrorPattern& p : order_t_error_set(4, 3)) {
        EXPECT_LE(p.a_count() + 2 * p.b_count(), 3u);
        for (std::size_t qa : p.a_positions)
            for (std::size_t qb : p.b_positions) EXPECT_NE(qa, qb);
    }
}

TEST(VerifyKlTest, DistanceMatchedOrderPasses) {
    for (const char* name : {"repetition(3)", "repetition(5)", "repetition(7)", "hamming74",
                             "extended_hamming84"}) {
        const KLReport report = verify_kl(lift(make_family(name)), 1e-10);
        EXPECT_TRUE(report.pass) << name << " violation " << report.max_violation;
    }
}

TEST(LiftTest, HammingCodeParameters) {
    const JumpCode qc = lift(make_family("hamming74"));
    EXPECT_EQ(qc.n, 7u);
    EXPECT_EQ(qc.basis_states.size(), 16u);  // a ((7, 16)) code
    EXPECT_EQ(qc.t, 2u);
}

TEST(VerifyKlTest, NegativeControls) {
    // parity(4) has d = 2; forcing t = 2 exceeds its strength.
    JumpCode weak = lift(make_family("parity(4)"));
    weak.t = 2;
    const KLReport weak_report = verify_kl(weak, 1e-10);
    EXPECT_FALSE(weak_report.pass);
    EXPECT_GT(weak_report.max_violation, 0.1);

    JumpCode rep3 = lift(make_family("repetition(3)"));
    rep3.t = 3;
    const KLReport rep3_report = verify_kl(rep3, 1e-10);
    EXPECT_FALSE(rep3_report.pass);
    EXPECT_GT(rep3_report.max_violation, 0.1);
}

TEST(VerifyKlTest, AlphaIsHermitian) {
    const KLReport report = verify_kl(lift(make_family("repetition(3)")), 1e-10);
    const std::size_t np = report.alpha.size();
    for (std::size_t p = 0; p < np; ++p)
        for (std::size_t q = 0; q < np; ++q)
            EXPECT_NEAR(std::abs(report.alpha[p][q] - std::conj(report.alpha[q][p])), 0.0, 1e-10);
}

TEST(KrausExpansionTest, FirstIdentityExactSecondIsTaylorRemainder) {
    for (double gamma : {1e-8, 0.01, 0.1, 0.5}) {
        const auto [first, second] = kraus_expansion_check(gamma);
        EXPECT_EQ(first, 0.0) << "gamma=" << gamma;
        // Scalar remainder of the sqrt(1-g) Taylor series.
        const double remainder = std::abs(std::sqrt(1.0 - gamma) - (1.0 - gamma / 2.0));
        EXPECT_NEAR(second, remainder, 1e-16);
    }
    const auto [first01, second01] = kraus_expansion_check(0.1);
    EXPECT_LE(second01, 0.00132);  // remainder = g^2/8 + g^3/16 + ...
    EXPECT_THROW(kraus_expansion_check(0.0), std::invalid_argument);
    EXPECT_THROW(kraus_expansion_check(0.6), std::invalid_argument);
}

TEST(RecoveryTest, NoiselessZeroRecordActsAsIdentityOnCodeSpace) {
    const JumpCode qc = lift(make_family("repetition(3)"));
    const RecoveryMap recovery = build_recovery(qc, 0.0, {0, 0, 0});
    for (const auto& psi : qc.basis_states) {
        const std::vector<cplx> out = recovery.kraus.apply(psi);
        for (std::size_t i = 0; i < psi.size(); ++i)
            EXPECT_NEAR(std::abs(out[i] - psi[i]), 0.0, 1e-10);
    }
}

TEST(RecoveryTest, RecordHeavierThanOrderThrows) {
    const JumpCode qc = lift(make_family("repetition(3)"));
    EXPECT_THROW(build_recovery(qc, 0.1, {1, 1, 1}), std::invalid_argument);
}

namespace {

// Conditional entanglement fidelity of recovery ∘ branch given the record.
double conditional_infidelity(const JumpCode& qc, double gamma, const std::vector<int>& record) {
    const ComplexMatrix kr = record_branch_kraus(gamma, record);
    const RecoveryMap recovery = build_recovery(qc, gamma, record);
    const ComplexMatrix composite = recovery.kraus * kr;
    const double kdim = static_cast<double>(qc.basis_states.size());

    cplx tr(0.0, 0.0);
    double prob = 0.0;
    const ComplexMatrix branch_out = kr * qc.projector * kr.adjoint();
    for (std::size_t i = 0; i < qc.dim; ++i) {
        prob += branch_out(i, i).real() / kdim;
        for (std::size_t j = 0; j < qc.dim; ++j)
            tr += qc.projector(i, j) * composite(j, i);
    }
    const double fidelity = std::norm(tr / kdim) / prob;
    return 1.0 - fidelity;
}

}  // namespace

TEST(RecoveryTest, ZeroJumpRecordSecondOrderFidelity) {
    // The claim is fidelity >= 1 - O(gamma^2); the transpose recovery on the
    // rank-2 no-jump branch is in fact exact to machine precision here.
    const JumpCode qc = lift(make_family("repetition(3)"));
    for (double g : {1e-2, 1e-3}) {
        const double value = conditional_infidelity(qc, g, {0, 0, 0});
        EXPECT_LE(value, 1e-2 * g * g);
    }
}

TEST(RecoveryTest, SingleJumpRecordFidelityApproachesOne) {
    const JumpCode qc = lift(make_family("repetition(3)"));
    for (double g : {0.01, 0.02, 0.04}) {
        // fidelity >= 1 - O(gamma) conditional on the one-jump record
        const double value = conditional_infidelity(qc, g, {0, 1, 0});
        EXPECT_LE(value, 0.1 * g);
    }
}

TEST(RecoveryTest, DoubleJumpRecordStillRecovers) {
    const JumpCode qc = lift(make_family("repetition(3)"));
    for (double g : {0.01, 0.02, 0.04}) {
        const double value = conditional_infidelity(qc, g, {1, 1, 0});
        EXPECT_LE(value, 10.0 * g * g);
    }
}

TEST(InfidelityTest, NoiselessChannelIsExact) {
    const JumpCode qc = lift(make_family("repetition(3)"));
    EXPECT_NEAR(entanglement_infidelity(qc, 0.0), 0.0, 1e-12);
}

TEST(InfidelityTest, ExactSumLimitedToSevenQubits) {
    const JumpCode qc = lift(make_family("extended_hamming84"));
    EXPECT_THROW(entanglement_infidelity(qc, 0.05), std::invalid_argument);
}

TEST(InfidelityTest, RepetitionThreeScalesAsGammaCubed) {
    const JumpCode qc = lift(make_family("repetition(3)"));
    const std::vector<double> gammas = {0.01, 0.02, 0.04};
    std::vector<double> values;
    for (double g : gammas) values.push_back(entanglement_infidelity(qc, g));
    const double slope = loglog_slope(gammas, values);
    EXPECT_NEAR(slope, 3.0, 0.3);
}

TEST(InfidelityTest, UnencodedQubitScalesLinearly) {
    const JumpCode qc = lift(make_family("repetition(1)"));  // the full single-qubit space
    const std::vector<double> gammas = {0.01, 0.02, 0.04};
    std::vector<double> values;
    for (double g : gammas) values.push_back(entanglement_infidelity(qc, g));
    const double slope = loglog_slope(gammas, values);
    EXPECT_NEAR(slope, 1.0, 0.2);
}

TEST(InfidelityTest, BoundedEitherSideOfScalingLaw) {
    // infidelity / gamma^d stays within fixed constants across a decade.
    const JumpCode qc = lift(make_family("repetition(3)"));
    double lo = 1e300, hi = 0.0;
    for (double g : {0.005, 0.01, 0.02, 0.05}) {
        const double ratio = entanglement_infidelity(qc, g) / (g * g * g);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    EXPECT_GT(lo, 0.0);
    EXPECT_LT(hi / lo, 10.0);
}
