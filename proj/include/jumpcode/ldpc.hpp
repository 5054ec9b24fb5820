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

#ifndef JUMPCODE_LDPC_HPP
#define JUMPCODE_LDPC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "jumpcode/gf2.hpp"
#include "jumpcode/jump_channel.hpp"
#include "jumpcode/linear_code.hpp"
#include "jumpcode/rng.hpp"

namespace jumpcode {

namespace detail {

inline std::size_t next_below(RngStream& rng, std::size_t bound) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(rng.next_u64()) * bound) >> 64);
}

inline void shuffle_indices(std::vector<std::size_t>& v, RngStream& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[next_below(rng, i)]);
}

}  // namespace detail

/// Regular Gallager-ensemble parity matrix: col_wt stacked layers, the first
/// with consecutive blocks of row_wt columns, the rest column-permuted
/// copies. When row_wt does not divide n the last row of each layer is
/// shorter. Layers are resampled to avoid 4-cycles (two rows sharing two
/// columns) when a cycle-free draw is found within the attempt budget.
inline BitMatrix random_ldpc_parity(std::size_t n, std::size_t row_wt, std::size_t col_wt,
                                    std::uint64_t seed) {
    if (row_wt < 2 || col_wt == 0 || n < row_wt)
        throw std::invalid_argument("random_ldpc: need n >= row_wt >= 2 and col_wt >= 1");
    const std::size_t rows_per_layer = (n + row_wt - 1) / row_wt;
    const std::size_t m = rows_per_layer * col_wt;
    if (m >= n) throw std::invalid_argument("random_ldpc: rate would be non-positive");

    RngStream rng(seed ^ 0x1D9C0DE1ULL);
    BitMatrix h(m, n);

    // rows_of_col[c] lists accepted rows touching column c.
    std::vector<std::vector<std::size_t>> rows_of_col(n);

    std::vector<std::size_t> perm(n);
    for (std::size_t layer = 0; layer < col_wt; ++layer) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        if (layer > 0) detail::shuffle_indices(perm, rng);

        // Local repair: while some row of this layer touches two columns
        // that already share an accepted row, swap one of them elsewhere.
        auto find_violation = [&]() -> std::ptrdiff_t {
            std::vector<std::size_t> priors;
            for (std::size_t r = 0; r < rows_per_layer; ++r) {
                priors.clear();
                const std::size_t hi = std::min(n, (r + 1) * row_wt);
                for (std::size_t j = r * row_wt; j < hi; ++j) {
                    for (std::size_t prior : rows_of_col[perm[j]]) {
                        for (std::size_t p : priors)
                            if (p == prior) return static_cast<std::ptrdiff_t>(j);
                        priors.push_back(prior);
                    }
                }
            }
            return -1;
        };
        std::size_t budget = 50 * n;  // best effort at small sizes
        while (budget-- > 0) {
            const std::ptrdiff_t j = find_violation();
            if (j < 0) break;
            std::swap(perm[static_cast<std::size_t>(j)], perm[detail::next_below(rng, n)]);
        }

        for (std::size_t r = 0; r < rows_per_layer; ++r) {
            const std::size_t row = layer * rows_per_layer + r;
            const std::size_t hi = std::min(n, (r + 1) * row_wt);
            for (std::size_t j = r * row_wt; j < hi; ++j) {
                const std::size_t col = perm[j];
                h.set(row, col, true);
                rows_of_col[col].push_back(row);
            }
        }
    }
    return h;
}

/// Sum-product decoder over the erasure+flip channel. The Tanner graph is
/// built once from the parity-check matrix; decode calls are independent.
///
/// LLR convention: positive means bit 0. Channel values are 0 for an
/// erasure and ±log((1-pE-pF)/pF) for a received bit, clamped to ±18.
class BpDecoder {
public:
    explicit BpDecoder(const BinaryLinearCode& code) : n_(code.n) {
        const BitMatrix& h = code.parity_check;
        check_edges_.resize(h.rows());
        var_edges_.resize(n_);
        for (std::size_t c = 0; c < h.rows(); ++c)
            for (std::size_t v = 0; v < n_; ++v)
                if (h.get(c, v)) {
                    const std::size_t e = edge_var_.size();
                    edge_var_.push_back(v);
                    check_edges_[c].push_back(e);
                    var_edges_[v].push_back(e);
                }
    }

    DecodeResult decode(const ReceivedWord& received, double gamma, std::size_t max_iters) const {
        if (received.size() != n_) throw std::invalid_argument("bp_decode: length mismatch");
        const double pe = xi_erasure_probability(gamma);
        const double pf = xi_flip_probability(gamma);
        const double ps = 1.0 - pe - pf;
        double magnitude = pf > 0.0 ? std::log(ps / pf) : max_llr;
        magnitude = std::min(magnitude, max_llr);

        std::vector<double> channel(n_, 0.0);
        for (std::size_t v = 0; v < n_; ++v) {
            if (received.symbols[v] == received_symbol::erased) continue;
            channel[v] = received.symbols[v] == received_symbol::zero ? magnitude : -magnitude;
        }

        std::vector<double> var_to_check(edge_var_.size());
        std::vector<double> check_to_var(edge_var_.size(), 0.0);
        for (std::size_t e = 0; e < edge_var_.size(); ++e) var_to_check[e] = channel[edge_var_[e]];

        std::vector<double> total = channel;
        std::size_t iterations = 0;
        if (!is_codeword(total)) {
            std::vector<double> t(edge_var_.size());
            std::vector<double> prefix, suffix;
            bool solved = false;
            for (std::size_t iter = 1; iter <= max_iters && !solved; ++iter) {
                // check pass with prefix/suffix products (erasures make zeros)
                for (const auto& edges : check_edges_) {
                    const std::size_t deg = edges.size();
                    prefix.assign(deg + 1, 1.0);
                    suffix.assign(deg + 1, 1.0);
                    for (std::size_t i = 0; i < deg; ++i)
                        t[i] = std::tanh(0.5 * var_to_check[edges[i]]);
                    for (std::size_t i = 0; i < deg; ++i) prefix[i + 1] = prefix[i] * t[i];
                    for (std::size_t i = deg; i-- > 0;) suffix[i] = suffix[i + 1] * t[i];
                    for (std::size_t i = 0; i < deg; ++i) {
                        double prod = prefix[i] * suffix[i + 1];
                        prod = std::clamp(prod, -(1.0 - 1e-15), 1.0 - 1e-15);
                        check_to_var[edges[i]] = 2.0 * std::atanh(prod);
                    }
                }
                // variable pass
                for (std::size_t v = 0; v < n_; ++v) {
                    double sum = channel[v];
                    for (std::size_t e : var_edges_[v]) sum += check_to_var[e];
                    total[v] = sum;
                    for (std::size_t e : var_edges_[v]) {
                        const double out = sum - check_to_var[e];
                        var_to_check[e] = std::clamp(out, -max_msg, max_msg);
                    }
                }
                iterations = iter;
                solved = is_codeword(total);
            }
            if (!solved) return DecodeResult{};
        }

        DecodeResult result;
        result.status = DecodeStatus::decoded;
        result.iterations = iterations;
        result.codeword = BitVector(n_);
        for (std::size_t v = 0; v < n_; ++v)
            if (total[v] < 0.0) result.codeword.set(v, true);
        for (std::size_t v = 0; v < n_; ++v) {
            if (received.symbols[v] == received_symbol::erased)
                ++result.corrected_erasures;
            else if ((received.symbols[v] == received_symbol::one) != result.codeword.get(v))
                ++result.corrected_flips;
        }
        return result;
    }

private:
    static constexpr double max_llr = 18.0;
    static constexpr double max_msg = 30.0;

    /// Hard decision is a codeword and no bit is left undecided (LLR 0).
    bool is_codeword(const std::vector<double>& total) const {
        for (double l : total)
            if (l == 0.0) return false;
        for (const auto& edges : check_edges_) {
            bool parity = false;
            for (std::size_t e : edges) parity ^= total[edge_var_[e]] < 0.0;
            if (parity) return false;
        }
        return true;
    }

    std::size_t n_;
    std::vector<std::size_t> edge_var_;
    std::vector<std::vector<std::size_t>> check_edges_;
    std::vector<std::vector<std::size_t>> var_edges_;
};

/// One-shot wrapper; building the decoder per call is fine for occasional
/// use, hot loops should construct a BpDecoder once.
inline DecodeResult bp_decode_xi(const BinaryLinearCode& code, const ReceivedWord& received,
                                 double gamma, std::size_t max_iters) {
    return BpDecoder(code).decode(received, gamma, max_iters);
}

}  // namespace jumpcode

#endif  // JUMPCODE_LDPC_HPP
