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

#include "qtab/noise_model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string_view>

#include "qtab/errors.h"
#include "qtab/modular.h"

namespace qtab {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidProbability("probability " + std::to_string(p) + " is outside [0, 1]");
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InvalidProbability("cannot parse probability '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

NoiseModel::NoiseModel(uint32_t d, Kind kind, double p, std::vector<double> weights)
    : d_(d), kind_(kind), p_(p), weights_(std::move(weights)) {
    double acc = 0;
    for (uint32_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] > 0) {
            acc += weights_[i];
            cumulative_.push_back(acc);
            cumulative_index_.push_back(i);
        }
    }
}

NoiseModel NoiseModel::depolarizing(double p, uint32_t d) {
    check_probability(p);
    check_dimension(d);
    const double each = p / (static_cast<double>(d) * d - 1);
    std::vector<double> w(std::size_t{d} * d, each);
    w[0] = 1 - p;
    return NoiseModel(d, Kind::kDepolarizing, p, std::move(w));
}

NoiseModel NoiseModel::dephasing(double p, uint32_t d) {
    check_probability(p);
    check_dimension(d);
    std::vector<double> w(std::size_t{d} * d, 0.0);
    w[0] = 1 - p;
    for (uint32_t b = 1; b < d; ++b) {
        w[b] = p / (d - 1);
    }
    return NoiseModel(d, Kind::kDephasing, p, std::move(w));
}

NoiseModel NoiseModel::dit_flip(double p, uint32_t d) {
    check_probability(p);
    check_dimension(d);
    std::vector<double> w(std::size_t{d} * d, 0.0);
    w[0] = 1 - p;
    for (uint32_t a = 1; a < d; ++a) {
        w[std::size_t{a} * d] = p / (d - 1);
    }
    return NoiseModel(d, Kind::kFlip, p, std::move(w));
}

NoiseModel NoiseModel::custom(uint32_t d, std::vector<double> weights) {
    check_dimension(d);
    if (weights.size() != std::size_t{d} * d) {
        throw InvalidProbability("a Weyl mixture needs d*d = " + std::to_string(d * d) + " weights, got " +
                                 std::to_string(weights.size()));
    }
    for (double w : weights) {
        check_probability(w);
    }
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) {
        throw InvalidProbability("Weyl mixture weights sum to " + format_double(total) + ", not 1");
    }
    double p = total - weights[0];
    return NoiseModel(d, Kind::kCustom, p, std::move(weights));
}

double NoiseModel::error_probability() const {
    return std::accumulate(weights_.begin() + 1, weights_.end(), 0.0);
}

NoiseModel NoiseModel::with_probability(double p) const {
    switch (kind_) {
        case Kind::kDepolarizing:
            return depolarizing(p, d_);
        case Kind::kDephasing:
            return dephasing(p, d_);
        case Kind::kFlip:
            return dit_flip(p, d_);
        case Kind::kCustom:
            break;
    }
    check_probability(p);
    const double old = error_probability();
    if (old == 0) {
        throw InvalidProbability("cannot rescale a noiseless mixture");
    }
    std::vector<double> w = weights_;
    for (std::size_t i = 1; i < w.size(); ++i) {
        w[i] *= p / old;
    }
    w[0] = 1 - p;
    return NoiseModel(d_, Kind::kCustom, p, std::move(w));
}

std::vector<std::pair<std::pair<uint32_t, uint32_t>, double>> NoiseModel::support() const {
    std::vector<std::pair<std::pair<uint32_t, uint32_t>, double>> out;
    for (uint32_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] > 0) {
            out.push_back({{i / d_, i % d_}, weights_[i]});
        }
    }
    return out;
}

std::pair<uint32_t, uint32_t> NoiseModel::sample(Rng &rng) const {
    const double u = rng.uniform01() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        --it;
    }
    uint32_t i = cumulative_index_[static_cast<std::size_t>(it - cumulative_.begin())];
    return {i / d_, i % d_};
}

std::string NoiseModel::name() const {
    switch (kind_) {
        case Kind::kDepolarizing:
            return "DEPOL(" + format_double(p_) + ")";
        case Kind::kDephasing:
            return "DEPHASE(" + format_double(p_) + ")";
        case Kind::kFlip:
            return "FLIP(" + format_double(p_) + ")";
        case Kind::kCustom:
            break;
    }
    std::string out = "WEYLMIX(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        out += (i == 0 ? "" : ":") + format_double(weights_[i]);
    }
    return out + ")";
}

NoiseModel NoiseModel::parse(const std::string &text, uint32_t d) {
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')') {
        throw InvalidProbability("noise model '" + text + "' is not of the form NAME(params)");
    }
    std::string_view head(text.data(), open);
    std::string_view args(text.data() + open + 1, text.size() - open - 2);
    if (head == "DEPOL") {
        return depolarizing(parse_double(args), d);
    }
    if (head == "DEPHASE") {
        return dephasing(parse_double(args), d);
    }
    if (head == "FLIP") {
        return dit_flip(parse_double(args), d);
    }
    if (head == "WEYLMIX") {
        std::vector<double> w;
        std::size_t start = 0;
        while (true) {
            auto colon = args.find(':', start);
            w.push_back(parse_double(args.substr(start, colon - start)));
            if (colon == std::string_view::npos) {
                break;
            }
            start = colon + 1;
        }
        return custom(d, std::move(w));
    }
    throw InvalidProbability("unknown noise model '" + std::string(head) + "'");
}

}  // namespace qtab
