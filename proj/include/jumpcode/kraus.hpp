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

#ifndef JUMPCODE_KRAUS_HPP
#define JUMPCODE_KRAUS_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jumpcode/complex_matrix.hpp"
#include "jumpcode/density_matrix.hpp"

namespace jumpcode {

namespace tol {
inline constexpr double kraus_completeness = 1e-12;
}

struct KrausBranch {
    ComplexMatrix op;
    std::size_t record = 0;  // classical symbol written when this branch fires
};

/// A quantum channel given by Kraus operators, each branch tagged with the
/// classical record symbol its detection writes. Completeness
/// sum_i K_i† K_i = I is enforced on construction.
class LabeledKrausChannel {
public:
    LabeledKrausChannel(std::size_t input_dim, std::size_t output_dim,
                        std::size_t record_alphabet, std::vector<KrausBranch> branches)
        : input_dim_(input_dim),
          output_dim_(output_dim),
          record_alphabet_(record_alphabet),
          branches_(std::move(branches)) {
        if (branches_.empty()) throw std::invalid_argument("LabeledKrausChannel: no branches");
        ComplexMatrix sum(input_dim_, input_dim_);
        for (const auto& b : branches_) {
            if (b.op.rows() != output_dim_ || b.op.cols() != input_dim_)
                throw std::invalid_argument("LabeledKrausChannel: branch shape mismatch");
            if (b.record >= record_alphabet_)
                throw std::invalid_argument("LabeledKrausChannel: record symbol out of alphabet");
            sum += b.op.adjoint() * b.op;
        }
        if (sum.max_abs_diff(ComplexMatrix::identity(input_dim_)) > tol::kraus_completeness)
            throw std::invalid_argument("LabeledKrausChannel: Kraus completeness violated");
    }

    std::size_t input_dim() const { return input_dim_; }
    std::size_t output_dim() const { return output_dim_; }
    std::size_t record_alphabet() const { return record_alphabet_; }
    const std::vector<KrausBranch>& branches() const { return branches_; }

private:
    std::size_t input_dim_;
    std::size_t output_dim_;
    std::size_t record_alphabet_;
    std::vector<KrausBranch> branches_;
};

/// sum_i K_i M K_i†, linear extension to arbitrary operators.
inline ComplexMatrix apply_to_matrix(const LabeledKrausChannel& ch, const ComplexMatrix& m) {
    if (m.rows() != ch.input_dim() || m.cols() != ch.input_dim())
        throw std::invalid_argument("apply_channel: dimension mismatch");
    ComplexMatrix out(ch.output_dim(), ch.output_dim());
    for (const auto& b : ch.branches()) out += b.op * m * b.op.adjoint();
    return out;
}

inline DensityMatrix apply_channel(const LabeledKrausChannel& ch, const DensityMatrix& rho) {
    return DensityMatrix(apply_to_matrix(ch, rho.matrix()));
}

/// Channel output together with the record register: block r carries the
/// branches whose record is r. Output lives on system ⊗ record with the
/// system as the most significant factor.
inline ComplexMatrix apply_labeled_to_matrix(const LabeledKrausChannel& ch,
                                             const ComplexMatrix& m) {
    if (m.rows() != ch.input_dim() || m.cols() != ch.input_dim())
        throw std::invalid_argument("apply_channel_labeled: dimension mismatch");
    const std::size_t rdim = ch.record_alphabet();
    ComplexMatrix out(ch.output_dim() * rdim, ch.output_dim() * rdim);
    for (const auto& b : ch.branches()) {
        const ComplexMatrix block = b.op * m * b.op.adjoint();
        for (std::size_t i = 0; i < ch.output_dim(); ++i)
            for (std::size_t j = 0; j < ch.output_dim(); ++j)
                out(i * rdim + b.record, j * rdim + b.record) += block(i, j);
    }
    return out;
}

inline DensityMatrix apply_channel_labeled(const LabeledKrausChannel& ch,
                                           const DensityMatrix& rho) {
    return DensityMatrix(apply_labeled_to_matrix(ch, rho.matrix()));
}

/// Record-only output: rho ↦ diag over record symbols of Tr(K_i rho K_i†).
/// For a detected channel this is its complementary channel.
inline ComplexMatrix complementary_to_matrix(const LabeledKrausChannel& ch,
                                             const ComplexMatrix& m) {
    if (m.rows() != ch.input_dim() || m.cols() != ch.input_dim())
        throw std::invalid_argument("complementary: dimension mismatch");
    ComplexMatrix out(ch.record_alphabet(), ch.record_alphabet());
    for (const auto& b : ch.branches())
        out(b.record, b.record) += (b.op * m * b.op.adjoint()).trace();
    return out;
}

class ComplementaryChannel {
public:
    explicit ComplementaryChannel(const LabeledKrausChannel& base) : base_(&base) {}

    ComplexMatrix apply_to_matrix(const ComplexMatrix& m) const {
        return complementary_to_matrix(*base_, m);
    }

    DensityMatrix operator()(const DensityMatrix& rho) const {
        return DensityMatrix(complementary_to_matrix(*base_, rho.matrix()));
    }

private:
    const LabeledKrausChannel* base_;
};

inline ComplementaryChannel complementary(const LabeledKrausChannel& ch) {
    return ComplementaryChannel(ch);
}

}  // namespace jumpcode

#endif  // JUMPCODE_KRAUS_HPP
