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

#ifndef JUMPCODE_RNG_HPP
#define JUMPCODE_RNG_HPP

#include <cstdint>
#include <span>
#include <stdexcept>

namespace jumpcode {

/// Deterministic random stream based on SplitMix64. Streams for different
/// trial indices are derived independently from (seed, trial), so a trial's
/// randomness does not depend on which worker executes it.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(mix(seed ^ 0x9E3779B97F4A7C15ULL)) {}

    static RngStream for_trial(std::uint64_t seed, std::uint64_t trial_index) {
        RngStream s(0);
        s.state_ = mix(mix(seed) ^ mix(trial_index * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL));
        return s;
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    /// Samples an index from an unnormalized nonnegative weight vector.
    std::size_t sample_discrete(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (total <= 0.0) throw std::invalid_argument("sample_discrete: nonpositive total weight");
        double u = next_double() * total;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            u -= weights[i];
            if (u < 0.0) return i;
        }
        return weights.size() - 1;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace jumpcode

#endif  // JUMPCODE_RNG_HPP
