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

#ifndef JUMPCODE_CAPACITY_HPP
#define JUMPCODE_CAPACITY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jumpcode/density_matrix.hpp"
#include "jumpcode/discrete_channel.hpp"
#include "jumpcode/jump_channel.hpp"
#include "jumpcode/kraus.hpp"
#include "jumpcode/rng.hpp"

namespace jumpcode {

/// u log2 u with the 0 log 0 := 0 convention.
inline double xlog2(double u) { return u > 0.0 ? u * std::log2(u) : 0.0; }

inline double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binary_entropy: p out of range");
    return -xlog2(p) - xlog2(1.0 - p);
}

/// Coherent information S(Phi(rho)) - S(Phi^C(rho)) in bits. The channel is
/// treated as detected: its output includes the record register, and the
/// complementary channel is the record distribution.
inline double coherent_info(const LabeledKrausChannel& ch, const DensityMatrix& rho) {
    const double s_out = entropy_of_hermitian(apply_labeled_to_matrix(ch, rho.matrix()));
    const double s_env = entropy_of_hermitian(complementary_to_matrix(ch, rho.matrix()));
    return s_out - s_env;
}

/// Coherent information of the detected-jump channel on the diagonal input
/// diag(1-x, x), as a scalar formula:
///   (1-gx) log2(1-gx) - (1-x) log2(1-x) - (1-g)x log2((1-g)x).
inline double dj_coherent_info_scalar(double gamma, double x) {
    JumpParams params(gamma);
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("dj_coherent_info_scalar: x out of range");
    return xlog2(1.0 - gamma * x) - xlog2(1.0 - x) - xlog2((1.0 - gamma) * x);
}

struct CoherentInfoResult {
    double value = 0.0;
    double argmax_x = 0.0;      // weight on |1⟩ of the maximizing input
    DensityMatrix argmax_state; // the maximizing input state

    CoherentInfoResult() : argmax_state(DensityMatrix::maximally_mixed(2)) {}
};

/// Quantum capacity of the detected-jump channel: the single-letter coherent
/// information, maximized over the diagonal weight x by a 1001-point grid
/// followed by golden-section refinement to |dx| < 1e-9.
inline CoherentInfoResult quantum_capacity_dj(double gamma) {
    JumpParams params(gamma);
    auto f = [&](double x) { return dj_coherent_info_scalar(gamma, x); };

    const std::size_t grid = 1001;
    double best_x = 0.0;
    double best_v = f(0.0);
    for (std::size_t i = 1; i < grid; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid - 1);
        const double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }

    const double step = 1.0 / static_cast<double>(grid - 1);
    double lo = std::max(0.0, best_x - step);
    double hi = std::min(1.0, best_x + step);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > 1e-9) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        }
        const double fb = std::max(f1, f2);
        if (fb > best_v) {
            best_v = fb;
            best_x = f1 >= f2 ? x1 : x2;
        }
    }

    CoherentInfoResult result;
    result.value = best_v;
    result.argmax_x = best_x;
    result.argmax_state = DensityMatrix::diagonal({1.0 - best_x, best_x});
    return result;
}

/// Quantum capacity by direct maximization of the matrix-path coherent
/// information over all single-qubit states (Bloch vector inside the unit
/// ball). Multi-start coordinate ascent with numerically estimated
/// derivatives, step tolerance 1e-8. Cross-check for the scalar route.
inline CoherentInfoResult quantum_capacity_general(double gamma, std::size_t starts = 20,
                                                   std::uint64_t seed = 0x6a756d70ULL) {
    JumpParams params(gamma);
    const LabeledKrausChannel ch = build_dj(gamma);

    auto state_of = [](const std::array<double, 3>& r) {
        ComplexMatrix m(2, 2);
        m(0, 0) = 0.5 * (1.0 + r[2]);
        m(1, 1) = 0.5 * (1.0 - r[2]);
        m(0, 1) = 0.5 * cplx(r[0], -r[1]);
        m(1, 0) = 0.5 * cplx(r[0], r[1]);
        return DensityMatrix(std::move(m));
    };
    auto objective = [&](const std::array<double, 3>& r) {
        return coherent_info(ch, state_of(r));
    };
    auto project = [](std::array<double, 3> r) {
        const double n2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        if (n2 > 1.0) {
            const double s = 1.0 / std::sqrt(n2);
            for (double& c : r) c *= s;
        }
        return r;
    };

    std::vector<std::array<double, 3>> start_points = {
        {0.0, 0.0, 0.0},  {0.0, 0.0, 0.5},  {0.0, 0.0, -0.5},
        {0.0, 0.0, 0.95}, {0.0, 0.0, -0.95}, {0.5, 0.0, 0.0},
    };
    RngStream rng(seed);
    while (start_points.size() < starts) {
        std::array<double, 3> r = {2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0,
                                   2.0 * rng.next_double() - 1.0};
        start_points.push_back(project(r));
    }

    std::array<double, 3> best_r = {0.0, 0.0, 0.0};
    double best_v = objective(best_r);

    const double h = 1e-6;
    for (const auto& start : start_points) {
        std::array<double, 3> r = project(start);
        double v = objective(r);
        for (int iter = 0; iter < 400; ++iter) {
            double max_move = 0.0;
            for (int c = 0; c < 3; ++c) {
                std::array<double, 3> rp = r, rm = r;
                rp[c] += h;
                rm[c] -= h;
                const double grad = (objective(project(rp)) - objective(project(rm))) / (2.0 * h);
                if (grad == 0.0) continue;
                double step = 0.25;
                while (step > 1e-9) {
                    std::array<double, 3> rn = r;
                    rn[c] += step * grad;
                    rn = project(rn);
                    const double vn = objective(rn);
                    if (vn > v) {
                        max_move = std::max(max_move, std::abs(rn[c] - r[c]));
                        r = rn;
                        v = vn;
                        break;
                    }
                    step *= 0.5;
                }
            }
            if (max_move < 1e-8) break;
        }
        if (v > best_v) {
            best_v = v;
            best_r = r;
        }
    }

    CoherentInfoResult result;
    result.value = best_v;
    result.argmax_state = state_of(best_r);
    result.argmax_x = result.argmax_state.matrix()(1, 1).real();
    return result;
}

/// Classical capacity of the induced erasure+flip channel, closed form:
/// H(pE, (1-pE)/2, (1-pE)/2) - H(pE, pF, 1-pE-pF).
inline double classical_capacity_xi(double gamma) {
    JumpParams params(gamma);
    const double pe = xi_erasure_probability(gamma);
    const double pf = xi_flip_probability(gamma);
    const double h_out = -xlog2(pe) - 2.0 * xlog2(0.5 * (1.0 - pe));
    const double h_cond = -xlog2(pe) - xlog2(pf) - xlog2(1.0 - pe - pf);
    return h_out - h_cond;
}

struct BlahutArimotoResult {
    double capacity = 0.0;              // certified lower bound at convergence
    std::vector<double> input_dist;     // achieving input distribution
    std::size_t iterations = 0;
};

/// Capacity of a discrete memoryless channel by Blahut-Arimoto alternating
/// maximization. Stops when the standard upper/lower capacity bound gap
/// max_x D(P(.|x) || q) - I(p) drops below tol.
inline BlahutArimotoResult blahut_arimoto(const DiscreteChannel& ch, double tolerance) {
    if (!(tolerance > 0.0)) throw std::invalid_argument("blahut_arimoto: tol must be positive");
    const std::size_t nx = ch.inputs();
    const std::size_t ny = ch.outputs();

    std::vector<double> p(nx, 1.0 / static_cast<double>(nx));
    std::vector<double> q(ny, 0.0);
    std::vector<double> d(nx, 0.0);

    BlahutArimotoResult result;
    for (std::size_t iter = 0; iter < 1000000; ++iter) {
        std::fill(q.begin(), q.end(), 0.0);
        for (std::size_t x = 0; x < nx; ++x)
            for (std::size_t y = 0; y < ny; ++y) q[y] += p[x] * ch(x, y);

        double lower = 0.0;
        double upper = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
            double dx = 0.0;
            for (std::size_t y = 0; y < ny; ++y) {
                const double pyx = ch(x, y);
                if (pyx > 0.0) dx += pyx * std::log2(pyx / q[y]);
            }
            d[x] = dx;
            lower += p[x] * dx;
            upper = std::max(upper, dx);
        }

        result.capacity = lower;
        result.input_dist = p;
        result.iterations = iter + 1;
        if (upper - lower < tolerance) return result;

        double norm = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
            p[x] *= std::exp2(d[x] - upper);  // shift by upper for stability
            norm += p[x];
        }
        for (double& px : p) px /= norm;
    }
    throw std::runtime_error("blahut_arimoto: did not converge");
}

/// Coherent information of the (undetected) bit-flip channel at the
/// maximally mixed input: 1 - H2(p). Also the capacity of the binary
/// symmetric channel with crossover p.
inline double capacity_bitflip_example(double p) {
    return 1.0 - binary_entropy(p);
}

struct CapacityCurve {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (gamma, bits per use)
};

/// Evaluates both capacities on a uniform gamma grid (endpoints included).
/// The classical curve never exceeds the quantum one beyond 1e-9.
inline std::pair<CapacityCurve, CapacityCurve> sweep_curves(double gamma_min, double gamma_max,
                                                            std::size_t steps) {
    if (!(gamma_min >= 0.0 && gamma_min < gamma_max && gamma_max <= 1.0))
        throw std::invalid_argument("sweep_curves: invalid gamma range");
    if (steps < 2) throw std::invalid_argument("sweep_curves: need at least 2 steps");

    CapacityCurve quantum{"q_capacity", {}};
    CapacityCurve classical{"c_capacity", {}};
    quantum.points.reserve(steps);
    classical.points.reserve(steps);

    for (std::size_t i = 0; i < steps; ++i) {
        const double gamma =
            gamma_min + (gamma_max - gamma_min) * static_cast<double>(i) /
                            static_cast<double>(steps - 1);
        const double q = std::clamp(quantum_capacity_dj(gamma).value, 0.0, 1.0);
        const double c = std::clamp(classical_capacity_xi(gamma), 0.0, 1.0);
        if (q < c - 1e-9)
            throw std::logic_error("sweep_curves: classical capacity exceeded quantum capacity");
        quantum.points.emplace_back(gamma, q);
        classical.points.emplace_back(gamma, c);
    }
    return {std::move(quantum), std::move(classical)};
}

}  // namespace jumpcode

#endif  // JUMPCODE_CAPACITY_HPP
