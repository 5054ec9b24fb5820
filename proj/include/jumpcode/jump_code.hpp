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

#ifndef JUMPCODE_JUMP_CODE_HPP
#define JUMPCODE_JUMP_CODE_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jumpcode/complex_matrix.hpp"
#include "jumpcode/eigen_hermitian.hpp"
#include "jumpcode/jump_channel.hpp"
#include "jumpcode/linear_code.hpp"

namespace jumpcode {

/// Quantum code whose basis states are the Hadamard transforms of the
/// codewords of a binary linear code. Corrects detected jumps up to order
/// t = d - 1.
struct JumpCode {
    BinaryLinearCode base;
    std::size_t n = 0;    // qubits
    std::size_t dim = 0;  // 2^n
    std::size_t t = 0;    // correction order
    std::vector<std::vector<cplx>> basis_states;
    ComplexMatrix projector;  // onto the code space

    explicit JumpCode(BinaryLinearCode base_) : base(std::move(base_)) {}
};

/// Basis-state index of a codeword: qubit 0 is the most significant bit.
inline std::size_t codeword_index(const BitVector& word) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < word.size(); ++i) idx = (idx << 1) | (word.get(i) ? 1 : 0);
    return idx;
}

/// Lifts a classical code to its quantum jump code: basis { H^{⊗n}|x⟩ }
/// over all codewords x, with t = d - 1.
inline JumpCode lift(const BinaryLinearCode& code) {
    if (code.n > 10) throw std::invalid_argument("lift: n too large for dense state vectors");
    std::size_t d;
    if (code.distance.has_value())
        d = *code.distance;
    else
        d = compute_distance(code);
    if (d == 0) throw std::invalid_argument("lift: code distance is zero");

    JumpCode qc(code);
    qc.n = code.n;
    qc.dim = std::size_t{1} << code.n;
    qc.t = d - 1;
    qc.projector = ComplexMatrix(qc.dim, qc.dim);

    const double norm = 1.0 / std::sqrt(static_cast<double>(qc.dim));
    const std::uint64_t count = std::uint64_t{1} << code.k;
    qc.basis_states.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        BitVector message(code.k);
        for (std::size_t b = 0; b < code.k; ++b)
            if ((m >> b) & 1) message.set(b, true);
        const std::size_t x = codeword_index(encode(code, message));

        std::vector<cplx> state(qc.dim);
        for (std::size_t y = 0; y < qc.dim; ++y) {
            const bool minus = std::popcount(static_cast<std::uint64_t>(x & y)) & 1;
            state[y] = minus ? -norm : norm;
        }
        for (std::size_t i = 0; i < qc.dim; ++i)
            for (std::size_t j = 0; j < qc.dim; ++j)
                qc.projector(i, j) += state[i] * std::conj(state[j]);
        qc.basis_states.push_back(std::move(state));
    }
    return qc;
}

/// Error support: A = X + iY (a heralded jump) at a_positions and B = I - Z
/// (the no-jump perturbation) at b_positions. Supports are disjoint; the
/// jump record of the pattern is exactly its A support.
struct ErrorPattern {
    std::vector<std::size_t> a_positions;
    std::vector<std::size_t> b_positions;

    std::size_t a_count() const { return a_positions.size(); }
    std::size_t b_count() const { return b_positions.size(); }

    bool operator==(const ErrorPattern&) const = default;
};

inline ComplexMatrix error_operator(const ErrorPattern& pattern, std::size_t n) {
    std::vector<int> kind(n, 0);
    for (std::size_t q : pattern.a_positions) {
        if (q >= n) throw std::invalid_argument("error_operator: qubit index out of range");
        kind[q] = 1;
    }
    for (std::size_t q : pattern.b_positions) {
        if (q >= n) throw std::invalid_argument("error_operator: qubit index out of range");
        if (kind[q] != 0) throw std::invalid_argument("error_operator: overlapping supports");
        kind[q] = 2;
    }
    const ComplexMatrix a = ComplexMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}});  // X + iY
    const ComplexMatrix b = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 2.0}});  // I - Z
    ComplexMatrix op = ComplexMatrix::identity(1);
    for (std::size_t q = 0; q < n; ++q)
        op = tensor(op, kind[q] == 1 ? a : (kind[q] == 2 ? b : ComplexMatrix::identity(2)));
    return op;
}

/// Applies an error pattern to a state vector in O(2^n) per affected qubit.
inline std::vector<cplx> apply_error_pattern(const ErrorPattern& pattern,
                                             const std::vector<cplx>& state, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    if (state.size() != dim) throw std::invalid_argument("apply_error_pattern: dim mismatch");
    std::vector<cplx> v = state;
    for (std::size_t q : pattern.a_positions) {
        const std::size_t w = std::size_t{1} << (n - 1 - q);
        for (std::size_t y = 0; y < dim; ++y)
            v[y] = (y & w) ? cplx(0.0, 0.0) : 2.0 * v[y | w];  // A = 2|0><1|
    }
    for (std::size_t q : pattern.b_positions) {
        const std::size_t w = std::size_t{1} << (n - 1 - q);
        for (std::size_t y = 0; y < dim; ++y)
            v[y] = (y & w) ? 2.0 * v[y] : cplx(0.0, 0.0);  // B = diag(0, 2)
    }
    return v;
}

/// All patterns with e + 2f <= t, disjoint supports, empty pattern included.
/// Deterministic order: ascending A mask, then ascending B mask.
inline std::vector<ErrorPattern> order_t_error_set(std::size_t n, std::size_t t) {
    if (n > 20) throw std::invalid_argument("order_t_error_set: n too large");
    std::vector<ErrorPattern> set;
    const std::size_t full = std::size_t{1} << n;
    for (std::size_t amask = 0; amask < full; ++amask) {
        const std::size_t e = static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(amask)));
        if (e > t) continue;
        const std::size_t f_limit = (t - e) / 2;
        const std::size_t comp = (full - 1) & ~amask;
        // enumerate submasks of comp, ascending
        std::size_t bmask = 0;
        while (true) {
            const std::size_t f = static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(bmask)));
            if (f <= f_limit) {
                ErrorPattern p;
                for (std::size_t q = 0; q < n; ++q) {
                    if ((amask >> q) & 1) p.a_positions.push_back(q);
                    if ((bmask >> q) & 1) p.b_positions.push_back(q);
                }
                set.push_back(std::move(p));
            }
            if (bmask == comp) break;
            bmask = (bmask - comp) & comp;  // next submask
        }
    }
    return set;
}

struct KLReport {
    bool pass = false;
    double max_violation = 0.0;
    std::vector<std::vector<cplx>> alpha;  // indexed by pattern pair
    std::pair<ErrorPattern, ErrorPattern> worst_pair;
};

/// Checks the error-correction conditions <psi_i| E_mu† E_nu |psi_j> =
/// alpha_{mu,nu} delta_{ij} over the order-t error set.
///
/// The jump positions of a pattern are heralded: the channel writes them to
/// the record register, whose states for different jump supports are
/// orthogonal. Pairs with different A supports therefore satisfy the
/// condition with alpha = 0 identically, and the scalar check applies
/// within each record sector. alpha is taken as the mean diagonal value.
inline KLReport verify_kl(const JumpCode& qc, double tolerance = 1e-10) {
    const auto patterns = order_t_error_set(qc.n, qc.t);
    const std::size_t np = patterns.size();
    const std::size_t nb = qc.basis_states.size();

    std::vector<std::vector<std::vector<cplx>>> table(np);
    for (std::size_t p = 0; p < np; ++p) {
        table[p].reserve(nb);
        for (std::size_t j = 0; j < nb; ++j)
            table[p].push_back(apply_error_pattern(patterns[p], qc.basis_states[j], qc.n));
    }

    auto inner = [&](const std::vector<cplx>& a, const std::vector<cplx>& b) {
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
        return acc;
    };

    KLReport report;
    report.alpha.assign(np, std::vector<cplx>(np, cplx(0.0, 0.0)));
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t q = 0; q < np; ++q) {
            if (patterns[p].a_positions != patterns[q].a_positions) continue;

            cplx diag_sum(0.0, 0.0);
            for (std::size_t i = 0; i < nb; ++i) diag_sum += inner(table[p][i], table[q][i]);
            const cplx alpha = diag_sum / static_cast<double>(nb);
            report.alpha[p][q] = alpha;

            for (std::size_t i = 0; i < nb; ++i) {
                for (std::size_t j = 0; j < nb; ++j) {
                    const cplx value = i == j ? inner(table[p][i], table[q][j]) - alpha
                                              : inner(table[p][i], table[q][j]);
                    const double violation = std::abs(value);
                    if (violation > report.max_violation) {
                        report.max_violation = violation;
                        report.worst_pair = {patterns[p], patterns[q]};
                    }
                }
            }
        }
    }
    report.pass = report.max_violation < tolerance;
    return report;
}

/// Deviations of the damping Kraus pair from the error-algebra expansion:
/// first  ||A_1 - (sqrt(g)/2) A||_max   (an exact identity),
/// second ||A_0 - (I - (g/4) B)||_max   (the first-order Taylor remainder).
inline std::pair<double, double> kraus_expansion_check(double gamma) {
    if (!(gamma > 0.0 && gamma <= 0.5))
        throw std::invalid_argument("kraus_expansion_check: gamma must lie in (0, 0.5]");
    const ComplexMatrix a = ComplexMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 2.0}});
    const double first =
        (damping_jump(gamma) - (std::sqrt(gamma) / 2.0) * a).max_abs();
    const ComplexMatrix approx = ComplexMatrix::identity(2) - (gamma / 4.0) * b;
    const double second = (damping_no_jump(gamma) - approx).max_abs();
    return {first, second};
}

/// Kraus operator of the jump channel branch selected by a full jump record
/// (one bit per qubit).
inline ComplexMatrix record_branch_kraus(double gamma, const std::vector<int>& record) {
    const ComplexMatrix a0 = damping_no_jump(gamma);
    const ComplexMatrix a1 = damping_jump(gamma);
    ComplexMatrix op = ComplexMatrix::identity(1);
    for (int bit : record) op = tensor(op, bit ? a1 : a0);
    return op;
}

/// Record-conditioned transpose-channel recovery restricted to the code
/// space: R = P K_r† sigma^{-1/2} with sigma = K_r P K_r†. R† R is the
/// projector onto the support of sigma, so the operation is trace
/// non-increasing; I - R† R is the abort branch.
struct RecoveryMap {
    ComplexMatrix kraus;

    ComplexMatrix apply(const ComplexMatrix& m) const { return kraus * m * kraus.adjoint(); }
};

inline RecoveryMap build_recovery(const JumpCode& qc, double gamma,
                                  const std::vector<int>& record) {
    JumpParams params(gamma);
    if (record.size() != qc.n) throw std::invalid_argument("build_recovery: record length != n");
    std::size_t jumps = 0;
    for (int bit : record) jumps += bit ? 1 : 0;
    if (jumps > qc.t) throw std::invalid_argument("build_recovery: record weight exceeds t");

    const ComplexMatrix kr = record_branch_kraus(gamma, record);
    const ComplexMatrix sigma = kr * qc.projector * kr.adjoint();
    const ComplexMatrix inv_sqrt = hermitian_inverse_sqrt(sigma);
    return RecoveryMap{qc.projector * kr.adjoint() * inv_sqrt};
}

/// 1 - F_e for record-conditioned recovery after n uses of the detected-jump
/// channel, on the maximally mixed code-space input. The sum over jump
/// records is exact; records heavier than t are counted as failures.
inline double entanglement_infidelity(const JumpCode& qc, double gamma) {
    JumpParams params(gamma);
    if (qc.n > 7) throw std::invalid_argument("entanglement_infidelity: n too large");

    const double kdim = static_cast<double>(qc.basis_states.size());
    double fidelity = 0.0;
    const std::size_t records = std::size_t{1} << qc.n;
    for (std::size_t mask = 0; mask < records; ++mask) {
        const std::size_t weight =
            static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(mask)));
        if (weight > qc.t) continue;

        std::vector<int> record(qc.n, 0);
        for (std::size_t q = 0; q < qc.n; ++q)
            if ((mask >> q) & 1) record[q] = 1;

        const ComplexMatrix kr = record_branch_kraus(gamma, record);
        const RecoveryMap recovery = build_recovery(qc, gamma, record);
        const ComplexMatrix composite = recovery.kraus * kr;

        cplx tr(0.0, 0.0);
        for (std::size_t i = 0; i < qc.dim; ++i)
            for (std::size_t j = 0; j < qc.dim; ++j)
                tr += qc.projector(i, j) * composite(j, i);
        tr /= kdim;
        fidelity += std::norm(tr);
    }
    return std::clamp(1.0 - fidelity, 0.0, 1.0);
}

}  // namespace jumpcode

#endif  // JUMPCODE_JUMP_CODE_HPP
