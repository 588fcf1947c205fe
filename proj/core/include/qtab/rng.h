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

#ifndef QTAB_RNG_H
#define QTAB_RNG_H

#include <cstdint>
#include <limits>

namespace qtab {

/// SplitMix64 finalizer. Used to derive independent stream seeds from a master seed.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Purposes of derived streams. Distinct purposes never share a stream for the same shot.
enum class Stream : uint64_t {
    kMaster = 0,
    kNoise = 1,
    kFrameInit = 2,
    kMeasure = 3,
    kReference = 4,
};

/// xoshiro256** generator. Satisfies UniformRandomBitGenerator.
///
/// Output is fully specified (no implementation-defined distributions), so a given seed
/// produces the same draws on every platform.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed = 0) {
        uint64_t s = seed;
        for (auto &w : state_) {
            s = splitmix64(s);
            w = s;
        }
    }

    /// Stream for (seed, purpose, index). Streams for different indices are independent
    /// and do not depend on how shots are distributed over workers.
    static Rng for_stream(uint64_t seed, Stream purpose, uint64_t index) {
        uint64_t h = splitmix64(seed ^ splitmix64(static_cast<uint64_t>(purpose) + 0x51ED270B27A4A2D1ULL));
        return Rng(splitmix64(h + index * 0x9E3779B97F4A7C15ULL));
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t uniform(uint64_t bound) {
        // Rejection keeps the draw exactly uniform.
        const uint64_t limit = max() - max() % bound;
        uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

   private:
    static constexpr uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    uint64_t state_[4];
};

}  // namespace qtab

#endif
