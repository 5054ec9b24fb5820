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

#ifndef JUMPCODE_EIGEN_HERMITIAN_HPP
#define JUMPCODE_EIGEN_HERMITIAN_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "jumpcode/complex_matrix.hpp"

namespace jumpcode {

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. The input is symmetrized as (M + M†)/2 before iterating, so
/// small anti-Hermitian drift in channel outputs is tolerated.
inline EigenSystem eigh(const ComplexMatrix& matrix) {
    if (matrix.rows() != matrix.cols()) throw std::invalid_argument("eigh: matrix not square");
    const std::size_t n = matrix.rows();

    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = 0.5 * (matrix(i, j) + std::conj(matrix(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);

    double scale = m.max_abs();
    if (scale == 0.0) scale = 1.0;
    const double stop = 1e-30 * scale * scale * static_cast<double>(n * n);

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(m(p, q));
        if (off < stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx g = m(p, q);
                const double absg = std::abs(g);
                if (absg <= 1e-300) {
                    m(p, q) = 0.0;
                    m(q, p) = 0.0;
                    continue;
                }
                const cplx phase = g / absg;  // e^{i phi}
                const double alpha = m(p, p).real();
                const double beta = m(q, q).real();
                const double theta = (beta - alpha) / (2.0 * absg);
                const double sgn = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx spq = s * phase;  // J(p,q) entry

                // M <- M J : mix columns p and q.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx mip = m(i, p);
                    const cplx miq = m(i, q);
                    m(i, p) = c * mip - std::conj(spq) * miq;
                    m(i, q) = spq * mip + c * miq;
                }
                // M <- J† M : mix rows p and q.
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx mpj = m(p, j);
                    const cplx mqj = m(q, j);
                    m(p, j) = c * mpj - spq * mqj;
                    m(q, j) = std::conj(spq) * mpj + c * mqj;
                }
                // V <- V J.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p);
                    const cplx viq = v(i, q);
                    v(i, p) = c * vip - std::conj(spq) * viq;
                    v(i, q) = spq * vip + c * viq;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
            }
        }
    }

    EigenSystem sys;
    sys.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) sys.values[i] = m(i, i).real();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sys.values[a] < sys.values[b]; });

    std::vector<double> sorted(n);
    ComplexMatrix vs(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted[k] = sys.values[order[k]];
        for (std::size_t i = 0; i < n; ++i) vs(i, k) = v(i, order[k]);
    }
    sys.values = std::move(sorted);
    sys.vectors = std::move(vs);
    return sys;
}

inline std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
    return eigh(m).values;
}

/// Pseudo inverse square root of a Hermitian PSD matrix. Eigenvalues at or
/// below cutoff_ratio * lambda_max are treated as zero.
inline ComplexMatrix hermitian_inverse_sqrt(const ComplexMatrix& m, double cutoff_ratio = 1e-12) {
    EigenSystem sys = eigh(m);
    const std::size_t n = m.rows();
    double lmax = 0.0;
    for (double lambda : sys.values) lmax = std::max(lmax, lambda);
    const double cutoff = std::max(lmax * cutoff_ratio, 0.0);

    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = sys.values[k];
        if (lambda <= cutoff) continue;
        const double w = 1.0 / std::sqrt(lambda);
        for (std::size_t i = 0; i < n; ++i) {
            const cplx uik = sys.vectors(i, k);
            if (uik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += w * uik * std::conj(sys.vectors(j, k));
        }
    }
    return out;
}

}  // namespace jumpcode

#endif  // JUMPCODE_EIGEN_HERMITIAN_HPP
