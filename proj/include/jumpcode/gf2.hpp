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

#ifndef JUMPCODE_GF2_HPP
#define JUMPCODE_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace jumpcode {

/// Bit vector over GF(2), packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_bits(const std::vector<int>& bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) v.set(i, true);
        return v;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& o) {
        if (n_ != o.n_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t word : w_) w += static_cast<std::size_t>(std::popcount(word));
        return w;
    }

    bool any() const {
        for (std::uint64_t word : w_)
            if (word) return true;
        return false;
    }

    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Hamming distance restricted to positions outside `mask` (mask bits set =
/// positions ignored).
inline std::size_t masked_distance(const BitVector& a, const BitVector& b, const BitVector& mask) {
    std::size_t d = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    const auto& wm = mask.words();
    for (std::size_t k = 0; k < wa.size(); ++k)
        d += static_cast<std::size_t>(std::popcount((wa[k] ^ wb[k]) & ~wm[k]));
    return d;
}

/// Matrix over GF(2) with packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows),
          cols_(cols),
          wpr_(cols == 0 ? 1 : (cols + 63) / 64),
          data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows[0].size();
        BitMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("BitMatrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                if (rows[i][j]) m.set(i, j, true);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (value)
            data_[r * wpr_ + (c >> 6)] |= mask;
        else
            data_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    BitVector row(std::size_t r) const {
        BitVector v(cols_);
        for (std::size_t k = 0; k < wpr_; ++k) v.words()[k] = data_[r * wpr_ + k];
        return v;
    }

    void xor_row_into(std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < wpr_; ++k) data_[dst * wpr_ + k] ^= data_[src * wpr_ + k];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t k = 0; k < wpr_; ++k)
            std::swap(data_[a * wpr_ + k], data_[b * wpr_ + k]);
    }

    /// XOR the row `r` into an external accumulator of matching length.
    void xor_row_into_vector(std::size_t r, BitVector& acc) const {
        for (std::size_t k = 0; k < wpr_; ++k) acc.words()[k] ^= data_[r * wpr_ + k];
    }

    std::size_t rank() const {
        BitMatrix m = *this;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && !m.get(pivot, col)) ++pivot;
            if (pivot == rows_) continue;
            m.swap_rows(rank, pivot);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != rank && m.get(r, col)) m.xor_row_into(r, rank);
            ++rank;
        }
        return rank;
    }

    /// rows(this) x rows(other): entry (i, j) = <row_i, other_row_j> over GF(2).
    BitMatrix times_transpose(const BitMatrix& other) const {
        if (cols_ != other.cols_) throw std::invalid_argument("times_transpose: width mismatch");
        BitMatrix out(rows_, other.rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < other.rows_; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < wpr_; ++k)
                    acc ^= data_[i * wpr_ + k] & other.data_[j * other.wpr_ + k];
                if (std::popcount(acc) & 1) out.set(i, j, true);
            }
        }
        return out;
    }

    bool is_zero() const {
        for (std::uint64_t w : data_)
            if (w) return false;
        return true;
    }

    /// Basis of the right nullspace {x : M x^T = 0}, one vector per row.
    BitMatrix nullspace() const {
        BitMatrix m = *this;
        std::vector<std::size_t> pivot_col;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && !m.get(pivot, col)) ++pivot;
            if (pivot == rows_) continue;
            m.swap_rows(rank, pivot);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != rank && m.get(r, col)) m.xor_row_into(r, rank);
            pivot_col.push_back(col);
            ++rank;
        }

        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivot_col) is_pivot[c] = true;

        BitMatrix basis(cols_ - rank, cols_);
        std::size_t b = 0;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            basis.set(b, free_col, true);
            for (std::size_t r = 0; r < rank; ++r)
                if (m.get(r, free_col)) basis.set(b, pivot_col[r], true);
            ++b;
        }
        return basis;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 1;
    std::vector<std::uint64_t> data_;
};

/// Row vector times matrix: out = v M (v has M.rows() bits).
inline BitVector gf2_vecmat(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("gf2_vecmat: length mismatch");
    BitVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (v.get(i)) m.xor_row_into_vector(i, out);
    return out;
}

}  // namespace jumpcode

#endif  // JUMPCODE_GF2_HPP
