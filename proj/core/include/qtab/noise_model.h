// Copyright 2026 The qtab Authors
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


#ifndef QTAB_NOISE_MODEL_H
#define QTAB_NOISE_MODEL_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qtab/rng.h"

namespace qtab {

/// Stochastic single-qudit Weyl channel: W(a, b) is applied with probability weight(a, b).
class NoiseModel {
   public:
    enum class Kind : uint8_t {
        kDepolarizing,
        kDephasing,
        kFlip,
        kCustom,
    };

    static NoiseModel depolarizing(double p, uint32_t d);
    static NoiseModel dephasing(double p, uint32_t d);
    static NoiseModel dit_flip(double p, uint32_t d);
    /// weights[a * d + b] is the probability of W(a, b); they must sum to one.
    static NoiseModel custom(uint32_t d, std::vector<double> weights);

    /// Parses "DEPOL(p)", "DEPHASE(p)", "FLIP(p)" or "WEYLMIX(q00:q01:...)".
    static NoiseModel parse(const std::string &text, uint32_t d);
    /// Inverse of parse; doubles are written in shortest round-trip form.
    std::string name() const;

    uint32_t dim() const {
        return d_;
    }
    Kind kind() const {
        return kind_;
    }
    double weight(uint32_t a, uint32_t b) const {
        return weights_[a * d_ + b];
    }
    const std::vector<double> &weights() const {
        return weights_;
    }
    /// Total probability of a non-identity draw.
    double error_probability() const;

    /// Same channel family with a new error probability (custom tables are rescaled).
    NoiseModel with_probability(double p) const;

    /// Nonzero-weight terms as ((a, b), weight), identity included when its weight is positive.
    std::vector<std::pair<std::pair<uint32_t, uint32_t>, double>> support() const;

    /// Draws (a, b). Consumes exactly one uniform double from rng.
    std::pair<uint32_t, uint32_t> sample(Rng &rng) const;

    bool operator==(const NoiseModel &other) const {
        return d_ == other.d_ && kind_ == other.kind_ && p_ == other.p_ && weights_ == other.weights_;
    }

   private:
    NoiseModel(uint32_t d, Kind kind, double p, std::vector<double> weights);

    uint32_t d_;
    Kind kind_;
    double p_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;
    std::vector<uint32_t> cumulative_index_;
};

}  // namespace qtab

#endif
