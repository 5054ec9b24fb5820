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

#ifndef JUMPCODE_DISCRETE_CHANNEL_HPP
#define JUMPCODE_DISCRETE_CHANNEL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jumpcode {

/// Discrete memoryless channel: row-stochastic matrix of P(y|x).
class DiscreteChannel {
public:
    DiscreteChannel(std::size_t inputs, std::size_t outputs, std::vector<double> transition)
        : inputs_(inputs), outputs_(outputs), p_(std::move(transition)) {
        if (p_.size() != inputs_ * outputs_)
            throw std::invalid_argument("DiscreteChannel: transition size mismatch");
        for (std::size_t x = 0; x < inputs_; ++x) {
            double row = 0.0;
            for (std::size_t y = 0; y < outputs_; ++y) {
                if ((*this)(x, y) < 0.0)
                    throw std::invalid_argument("DiscreteChannel: negative probability");
                row += (*this)(x, y);
            }
            if (std::abs(row - 1.0) > 1e-12)
                throw std::invalid_argument("DiscreteChannel: row does not sum to 1");
        }
    }

    std::size_t inputs() const { return inputs_; }
    std::size_t outputs() const { return outputs_; }

    double operator()(std::size_t x, std::size_t y) const { return p_[x * outputs_ + y]; }

    std::vector<double> row(std::size_t x) const {
        return std::vector<double>(p_.begin() + x * outputs_, p_.begin() + (x + 1) * outputs_);
    }

private:
    std::size_t inputs_;
    std::size_t outputs_;
    std::vector<double> p_;
};

}  // namespace jumpcode

#endif  // JUMPCODE_DISCRETE_CHANNEL_HPP
