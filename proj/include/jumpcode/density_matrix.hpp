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

#ifndef JUMPCODE_DENSITY_MATRIX_HPP
#define JUMPCODE_DENSITY_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "jumpcode/complex_matrix.hpp"
#include "jumpcode/eigen_hermitian.hpp"

namespace jumpcode {

namespace tol {
inline constexpr double hermiticity = 1e-12;
inline constexpr double trace_one = 1e-12;
inline constexpr double psd_floor = -1e-10;
inline constexpr double entropy_eig_clamp = 1e-14;
}  // namespace tol

/// Quantum state: Hermitian, unit-trace, positive semidefinite matrix.
/// Validity is checked on construction. Basis convention: qubit 0 is the
/// most significant bit of the computational basis index.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw std::invalid_argument("DensityMatrix: not square");
        if (!m_.is_hermitian(tol::hermiticity))
            throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
        if (std::abs(m_.trace() - cplx(1.0, 0.0)) > tol::trace_one)
            throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-12");
        const auto lambdas = eigenvalues_hermitian(m_);
        if (!lambdas.empty() && lambdas.front() < tol::psd_floor)
            throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
    }

    static DensityMatrix pure(const std::vector<cplx>& amplitudes) {
        double norm2 = 0.0;
        for (const auto& a : amplitudes) norm2 += std::norm(a);
        if (norm2 <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
        ComplexMatrix m(amplitudes.size(), amplitudes.size());
        for (std::size_t i = 0; i < amplitudes.size(); ++i)
            for (std::size_t j = 0; j < amplitudes.size(); ++j)
                m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm2;
        return DensityMatrix(std::move(m));
    }

    static DensityMatrix maximally_mixed(std::size_t dim) {
        ComplexMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
        return DensityMatrix(std::move(m));
    }

    static DensityMatrix diagonal(const std::vector<double>& p) {
        ComplexMatrix m(p.size(), p.size());
        for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
        return DensityMatrix(std::move(m));
    }

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }

private:
    ComplexMatrix m_;
};

/// Partial trace at the matrix level (linear extension, no state checks).
/// dims lists subsystem dimensions with subsystem 0 most significant; keep
/// holds the indices of subsystems retained, in ascending order.
inline ComplexMatrix partial_trace_matrix(const ComplexMatrix& m,
                                          const std::vector<std::size_t>& dims,
                                          const std::vector<std::size_t>& keep) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (m.rows() != total || m.cols() != total)
        throw std::invalid_argument("partial_trace: subsystem dims do not factor the matrix");
    for (std::size_t i = 0; i + 1 < keep.size(); ++i)
        if (keep[i] >= keep[i + 1]) throw std::invalid_argument("partial_trace: keep not ascending");
    for (std::size_t s : keep)
        if (s >= dims.size()) throw std::invalid_argument("partial_trace: keep index out of range");

    std::vector<bool> kept(dims.size(), false);
    for (std::size_t s : keep) kept[s] = true;

    std::size_t kept_dim = 1, traced_dim = 1;
    for (std::size_t s = 0; s < dims.size(); ++s) (kept[s] ? kept_dim : traced_dim) *= dims[s];

    // Stride (in the full index) of each subsystem digit.
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t s = dims.size(); s-- > 1;) stride[s - 1] = stride[s] * dims[s];

    auto full_index = [&](std::size_t kept_idx, std::size_t traced_idx) {
        std::size_t idx = 0;
        for (std::size_t s = dims.size(); s-- > 0;) {
            std::size_t digit;
            if (kept[s]) {
                digit = kept_idx % dims[s];
                kept_idx /= dims[s];
            } else {
                digit = traced_idx % dims[s];
                traced_idx /= dims[s];
            }
            idx += digit * stride[s];
        }
        return idx;
    };

    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t a = 0; a < kept_dim; ++a)
        for (std::size_t b = 0; b < kept_dim; ++b) {
            cplx acc(0.0, 0.0);
            for (std::size_t t = 0; t < traced_dim; ++t)
                acc += m(full_index(a, t), full_index(b, t));
            out(a, b) = acc;
        }
    return out;
}

inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::vector<std::size_t>& dims,
                                   const std::vector<std::size_t>& keep) {
    return DensityMatrix(partial_trace_matrix(rho.matrix(), dims, keep));
}

/// -sum p log2 p with 0 log 0 := 0.
inline double shannon_entropy(std::span<const double> p) {
    double sum = 0.0;
    for (double v : p) {
        if (v < 0.0) throw std::invalid_argument("shannon_entropy: negative entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
    double h = 0.0;
    for (double v : p)
        if (v > 0.0) h -= v * std::log2(v);
    return h;
}

inline double shannon_entropy(const std::vector<double>& p) {
    return shannon_entropy(std::span<const double>(p));
}

/// Entropy of a Hermitian PSD matrix in bits; eigenvalues below 1e-14 are
/// clamped to zero before the log.
inline double entropy_of_hermitian(const ComplexMatrix& m) {
    if (!m.is_hermitian(tol::hermiticity))
        throw std::invalid_argument("von_neumann_entropy: matrix not Hermitian");
    double h = 0.0;
    for (double lambda : eigenvalues_hermitian(m)) {
        if (lambda < tol::entropy_eig_clamp) continue;
        h -= lambda * std::log2(lambda);
    }
    return h;
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_of_hermitian(rho.matrix());
}

}  // namespace jumpcode

#endif  // JUMPCODE_DENSITY_MATRIX_HPP
