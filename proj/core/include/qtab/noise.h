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


#ifndef QTAB_NOISE_H
#define QTAB_NOISE_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qtab/circuit.h"
#include "qtab/composite.h"
#include "qtab/noise_model.h"
#include "qtab/rng.h"
#include "qtab/tableau.h"

namespace qtab {

/// One row per shot; columns follow Circuit::measured_qudits().
using ShotTable = std::vector<std::vector<uint32_t>>;

enum class Strategy : uint8_t {
    kDirect,
    kFrames,
    kPush,
};

/// Shot s draws from Rng::for_stream(seed, purpose, s), so results do not depend on `workers`.
struct RunOptions {
    uint64_t seed = 0;
    /// 0 selects the hardware concurrency.
    std::size_t workers = 1;
};

/// Accumulated Weyl error X^a Z^b, tracked without phases.
struct PauliFrame {
    uint32_t d = 2;
    std::vector<uint32_t> a;
    std::vector<uint32_t> b;

    PauliFrame(std::size_t n, uint32_t dim) : d(dim), a(n, 0), b(n, 0) {
    }
    bool is_trivial() const;
};

/// Conjugates the frame through a gate: W -> G W G^dagger on the exponents.
void frame_conjugate(PauliFrame &f, const Gate &g);

/// Draws one Weyl error from the model and applies it to the tableau (phase column only).
void apply_noise_direct(Tableau &t, const NoiseModel &model, std::size_t q, Rng &rng);

/// Simulates every shot on its own tableau, sampling noise as it is met.
ShotTable run_direct(const Circuit &c, std::size_t shots, const RunOptions &opts);

/// Noiseless reference outcome plus per-shot frames. With randomize_b, frames start as
/// Z^b for uniform b, which spreads the reference over the full outcome distribution.
ShotTable pauli_frame_run(const Circuit &c, std::size_t shots, const RunOptions &opts, bool randomize_b = true);

struct PushSite {
    std::size_t model = 0;
    std::size_t qudit = 0;
    /// Column `qudit` of all 2n rows just before the site.
    std::vector<uint32_t> x;
    std::vector<uint32_t> z;
};

struct PushPlan {
    Tableau clean;
    std::vector<PushSite> sites;
    std::vector<NoiseModel> models;
    std::vector<std::size_t> measured;
    /// Present for composite d, where outcomes come from the Smith-normal-form path.
    std::optional<SnfSampler> snf;

    /// Sums the phase shifts of one draw per site. Length 2n.
    std::vector<uint32_t> draw_delta(Rng &noise_rng) const;
    /// Phase shift for a fixed draw (a_k, b_k) at every site k.
    std::vector<uint32_t> delta_for(const std::vector<std::pair<uint32_t, uint32_t>> &draws) const;
};

PushPlan build_push_plan(const Circuit &c);

struct PushResult {
    std::vector<std::vector<uint32_t>> delta_tau;
    ShotTable outcomes;
};

PushResult push_sample(const PushPlan &plan, std::size_t shots, const RunOptions &opts);

/// Dispatches to one of the three strategies.
ShotTable sample(const Circuit &c, Strategy strategy, std::size_t shots, const RunOptions &opts);

struct FidelityEstimate {
    double estimate = 0;
    double std_error = 0;
    std::size_t shots = 0;
};

enum class FrameCriterion : uint8_t {
    /// The final frame commutes with every output stabilizer, so the state is unchanged.
    kCommutesWithStabilizers,
    /// The final frame is exactly X^0 Z^0.
    kTrivialFrame,
};

/// Fraction of shots whose accumulated stabilizer phase shift vanishes.
FidelityEstimate fidelity_push(const Circuit &c, std::size_t shots, const RunOptions &opts);
FidelityEstimate fidelity_frames(const Circuit &c, std::size_t shots, const RunOptions &opts,
                                 FrameCriterion criterion = FrameCriterion::kCommutesWithStabilizers);

/// c followed by the inverse of its gates. Noise stays in the first half and measurements
/// move to the end, so the noiseless output is |0...0>.
Circuit mirror_circuit(const Circuit &c);

/// Exact outcome distribution by enumerating every joint error pattern of the noise sites.
/// Throws TooLarge when more than `max_patterns` patterns would be needed.
std::map<std::vector<uint32_t>, double> enumerate_noisy_distribution(const Circuit &c,
                                                                     std::size_t max_patterns = 100000);

/// Exact outcome distribution of a tableau's measurement of the listed qudits.
std::map<std::vector<uint32_t>, double> exact_outcome_distribution(const Tableau &t,
                                                                   const std::vector<std::size_t> &measured);

}  // namespace qtab

#endif
