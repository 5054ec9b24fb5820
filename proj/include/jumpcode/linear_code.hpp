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

#ifndef JUMPCODE_LINEAR_CODE_HPP
#define JUMPCODE_LINEAR_CODE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jumpcode/gf2.hpp"

namespace jumpcode {

/// Binary linear [n, k] code with generator and parity-check matrices.
/// Construction enforces G H^T = 0 and the rank conditions.
struct BinaryLinearCode {
    std::size_t n = 0;
    std::size_t k = 0;
    BitMatrix generator;     // k x n
    BitMatrix parity_check;  // (n-k) x n
    std::optional<std::size_t> distance;

    BinaryLinearCode(std::size_t n_, std::size_t k_, BitMatrix g, BitMatrix h,
                     std::optional<std::size_t> d = std::nullopt)
        : n(n_), k(k_), generator(std::move(g)), parity_check(std::move(h)), distance(d) {
        if (generator.rows() != k || generator.cols() != n)
            throw std::invalid_argument("BinaryLinearCode: generator shape mismatch");
        if (parity_check.rows() != n - k || parity_check.cols() != n)
            throw std::invalid_argument("BinaryLinearCode: parity check shape mismatch");
        if (generator.rank() != k)
            throw std::invalid_argument("BinaryLinearCode: generator not full rank");
        if (parity_check.rank() != n - k)
            throw std::invalid_argument("BinaryLinearCode: parity check not full rank");
        if (!generator.times_transpose(parity_check).is_zero())
            throw std::invalid_argument("BinaryLinearCode: G H^T != 0");
    }
};

inline BitVector encode(const BinaryLinearCode& code, const BitVector& message) {
    if (message.size() != code.k) throw std::invalid_argument("encode: message length != k");
    return gf2_vecmat(message, code.generator);
}

inline BitVector syndrome(const BinaryLinearCode& code, const BitVector& word) {
    if (word.size() != code.n) throw std::invalid_argument("syndrome: word length != n");
    BitVector s(code.parity_check.rows());
    for (std::size_t r = 0; r < code.parity_check.rows(); ++r) {
        const BitVector row = code.parity_check.row(r);
        std::size_t acc = 0;
        for (std::size_t w = 0; w < row.words().size(); ++w)
            acc ^= static_cast<std::size_t>(
                std::popcount(row.words()[w] & word.words()[w]));
        if (acc & 1) s.set(r, true);
    }
    return s;
}

/// Minimum nonzero codeword weight by Gray-code enumeration of all 2^k
/// codewords. Exhaustive; limited to k <= 24.
inline std::size_t compute_distance(const BinaryLinearCode& code) {
    if (code.k == 0) throw std::invalid_argument("compute_distance: code has no nonzero words");
    if (code.k > 24) throw std::invalid_argument("compute_distance: k too large for enumeration");
    BitVector word(code.n);
    std::size_t best = code.n + 1;
    const std::uint64_t total = std::uint64_t{1} << code.k;
    for (std::uint64_t m = 1; m < total; ++m) {
        // Gray order: flipping message bit ctz(m) toggles one generator row.
        const unsigned bit = static_cast<unsigned>(std::countr_zero(m));
        code.generator.xor_row_into_vector(bit, word);
        const std::size_t w = word.weight();
        if (w != 0 && w < best) best = w;
    }
    return best;
}

namespace received_symbol {
inline constexpr std::uint8_t zero = 0;
inline constexpr std::uint8_t one = 1;
inline constexpr std::uint8_t erased = 2;
}  // namespace received_symbol

/// Channel output word over {0, 1, E}.
struct ReceivedWord {
    std::vector<std::uint8_t> symbols;

    std::size_t size() const { return symbols.size(); }

    BitVector known_bits() const {
        BitVector v(symbols.size());
        for (std::size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i] == received_symbol::one) v.set(i, true);
        return v;
    }

    BitVector erasure_mask() const {
        BitVector v(symbols.size());
        for (std::size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i] == received_symbol::erased) v.set(i, true);
        return v;
    }
};

enum class DecodeStatus { decoded, failure };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::failure;
    BitVector codeword;
    std::size_t corrected_erasures = 0;
    std::size_t corrected_flips = 0;
    std::size_t iterations = 0;  // used by iterative decoders
};

/// Minimum-distance decoding restricted to the non-erased coordinates, by
/// exhaustive enumeration of all 2^k codewords. A tie for the minimum is a
/// decoding failure, which makes the e + 2f < d guarantee exact. Limited to
/// 2^k <= 2^20.
inline DecodeResult decode_erasure_flip(const BinaryLinearCode& code,
                                        const ReceivedWord& received) {
    if (received.size() != code.n)
        throw std::invalid_argument("decode_erasure_flip: length mismatch");
    if (code.k > 20)
        throw std::invalid_argument("decode_erasure_flip: 2^k too large for enumeration");

    const BitVector target = received.known_bits();
    const BitVector mask = received.erasure_mask();

    BitVector word(code.n);
    BitVector best_word(code.n);
    std::size_t best = code.n + 1;
    bool tie = false;

    const std::uint64_t total = std::uint64_t{1} << code.k;
    for (std::uint64_t m = 0; m < total; ++m) {
        if (m != 0) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(m));
            code.generator.xor_row_into_vector(bit, word);
        }
        const std::size_t dist = masked_distance(word, target, mask);
        if (dist < best) {
            best = dist;
            best_word = word;
            tie = false;
        } else if (dist == best) {
            tie = true;
        }
    }

    DecodeResult result;
    if (tie) return result;
    result.status = DecodeStatus::decoded;
    result.codeword = best_word;
    result.corrected_erasures = mask.weight();
    result.corrected_flips = best;
    return result;
}

}  // namespace jumpcode

#endif  // JUMPCODE_LINEAR_CODE_HPP
