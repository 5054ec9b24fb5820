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

#ifndef JUMPCODE_CODE_FAMILIES_HPP
#define JUMPCODE_CODE_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jumpcode/gf2.hpp"
#include "jumpcode/ldpc.hpp"
#include "jumpcode/linear_code.hpp"

namespace jumpcode {

inline BinaryLinearCode repetition_code(std::size_t n) {
    if (n == 0) throw std::invalid_argument("repetition: n must be positive");
    BitMatrix g(1, n);
    for (std::size_t i = 0; i < n; ++i) g.set(0, i, true);
    BitMatrix h(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h.set(i, i, true);
        h.set(i, i + 1, true);
    }
    return BinaryLinearCode(n, 1, std::move(g), std::move(h), n);
}

inline BinaryLinearCode parity_code(std::size_t n) {
    if (n < 2) throw std::invalid_argument("parity: n must be at least 2");
    BitMatrix g(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        g.set(i, i, true);
        g.set(i, n - 1, true);
    }
    BitMatrix h(1, n);
    for (std::size_t i = 0; i < n; ++i) h.set(0, i, true);
    return BinaryLinearCode(n, n - 1, std::move(g), std::move(h), 2);
}

inline BinaryLinearCode hamming74_code() {
    const BitMatrix g = BitMatrix::from_rows({{1, 0, 0, 0, 1, 1, 0},
                                              {0, 1, 0, 0, 1, 0, 1},
                                              {0, 0, 1, 0, 0, 1, 1},
                                              {0, 0, 0, 1, 1, 1, 1}});
    const BitMatrix h = BitMatrix::from_rows(
        {{1, 1, 0, 1, 1, 0, 0}, {1, 0, 1, 1, 0, 1, 0}, {0, 1, 1, 1, 0, 0, 1}});
    return BinaryLinearCode(7, 4, g, h, 3);
}

inline BinaryLinearCode extended_hamming84_code() {
    const BitMatrix g = BitMatrix::from_rows({{1, 0, 0, 0, 1, 1, 0, 1},
                                              {0, 1, 0, 0, 1, 0, 1, 1},
                                              {0, 0, 1, 0, 0, 1, 1, 1},
                                              {0, 0, 0, 1, 1, 1, 1, 0}});
    const BitMatrix h = BitMatrix::from_rows({{1, 1, 0, 1, 1, 0, 0, 0},
                                              {1, 0, 1, 1, 0, 1, 0, 0},
                                              {0, 1, 1, 1, 0, 0, 1, 0},
                                              {1, 1, 1, 1, 1, 1, 1, 1}});
    return BinaryLinearCode(8, 4, g, h, 4);
}

/// Regular LDPC code from the Gallager ensemble; the generator is a computed
/// nullspace basis of the parity matrix, so k = n - rank(H).
inline BinaryLinearCode random_ldpc_code(std::size_t n, std::size_t row_wt, std::size_t col_wt,
                                         std::uint64_t seed) {
    BitMatrix h_full = random_ldpc_parity(n, row_wt, col_wt, seed);
    BitMatrix g = h_full.nullspace();
    const std::size_t k = g.rows();

    // BinaryLinearCode wants a full-rank (n-k) x n parity check; reduce H to
    // an independent row basis.
    BitMatrix reduced = h_full;
    std::vector<std::size_t> independent;
    {
        BitMatrix m = h_full;
        std::size_t rank = 0;
        std::vector<std::size_t> row_of(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) row_of[i] = i;
        for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
            std::size_t pivot = rank;
            while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
            if (pivot == m.rows()) continue;
            m.swap_rows(rank, pivot);
            std::swap(row_of[rank], row_of[pivot]);
            for (std::size_t r = rank + 1; r < m.rows(); ++r)
                if (m.get(r, col)) m.xor_row_into(r, rank);
            ++rank;
        }
        independent.assign(row_of.begin(), row_of.begin() + rank);
        std::sort(independent.begin(), independent.end());
    }
    BitMatrix h(independent.size(), n);
    for (std::size_t i = 0; i < independent.size(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (h_full.get(independent[i], c)) h.set(i, c, true);

    if (independent.size() != n - k)
        throw std::runtime_error("random_ldpc: rank bookkeeping failed");
    return BinaryLinearCode(n, k, std::move(g), std::move(h));
}

namespace detail {

inline std::vector<std::uint64_t> parse_arg_list(std::string_view s, std::size_t expected,
                                                 const std::string& name) {
    std::vector<std::uint64_t> args;
    if (s.empty() || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("make_family: expected " + name + "(...)");
    s.remove_prefix(1);
    s.remove_suffix(1);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos
                                                                             : comma - pos);
        if (tok.empty()) throw std::invalid_argument("make_family: empty argument");
        std::uint64_t value = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("make_family: non-numeric argument");
            value = value * 10 + static_cast<std::uint64_t>(ch - '0');
        }
        args.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (args.size() != expected)
        throw std::invalid_argument("make_family: " + name + " takes " +
                                    std::to_string(expected) + " argument(s)");
    return args;
}

}  // namespace detail

/// Builds a code from a descriptor string: repetition(n), parity(n),
/// hamming74, extended_hamming84, or random_ldpc(n,row_wt,col_wt,seed).
inline BinaryLinearCode make_family(const std::string& descriptor) {
    const std::size_t paren = descriptor.find('(');
    const std::string name = descriptor.substr(0, paren);
    const std::string_view rest =
        paren == std::string::npos ? std::string_view{} : std::string_view(descriptor).substr(paren);

    if (name == "repetition")
        return repetition_code(detail::parse_arg_list(rest, 1, name)[0]);
    if (name == "parity") return parity_code(detail::parse_arg_list(rest, 1, name)[0]);
    if (name == "hamming74") {
        if (!rest.empty()) throw std::invalid_argument("make_family: hamming74 takes no args");
        return hamming74_code();
    }
    if (name == "extended_hamming84") {
        if (!rest.empty())
            throw std::invalid_argument("make_family: extended_hamming84 takes no args");
        return extended_hamming84_code();
    }
    if (name == "random_ldpc") {
        const auto args = detail::parse_arg_list(rest, 4, name);
        return random_ldpc_code(args[0], args[1], args[2], args[3]);
    }
    throw std::invalid_argument("make_family: unknown family '" + name + "'");
}

}  // namespace jumpcode

#endif  // JUMPCODE_CODE_FAMILIES_HPP
