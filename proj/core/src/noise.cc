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

#include "qtab/noise.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qtab/errors.h"
#include "qtab/parallel.h"

namespace qtab {

namespace {

void require_terminal_measurements(const Circuit &c, const char *what) {
    if (!c.measurements_are_terminal()) {
        throw Error(std::string(what) + " needs every measurement at the end of the circuit");
    }
}

void require_measurement(const Circuit &c) {
    if (!c.has_measurement()) {
        throw NoMeasurement("circuit has no measurement");
    }
}

std::vector<uint32_t> pick(const std::vector<uint32_t> &full, const std::vector<std::size_t> &measured) {
    std::vector<uint32_t> out;
    out.reserve(measured.size());
    for (std::size_t q : measured) {
        out.push_back(full[q]);
    }
    return out;
}

/// Noiseless final tableau of the gate part of c.
Tableau clean_run(const Circuit &c) {
    Tableau t(c.num_qudits(), c.dim());
    for (const auto &op : c.ops()) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            t.apply(*g);
        }
    }
    return t;
}

/// Draws the listed qudits of a terminal measurement from t.
std::vector<uint32_t> measure_terminal(Tableau t, const std::vector<std::size_t> &measured, Rng &rng) {
    if (is_prime(t.dim())) {
        return t.measure_subset(measured, rng);
    }
    SnfSampler s = SnfSampler::build(t);
    std::vector<uint32_t> full(t.num_qudits());
    s.sample_into(rng, full.data());
    return pick(full, measured);
}

FidelityEstimate summarize(std::size_t successes, std::size_t shots) {
    FidelityEstimate f;
    f.shots = shots;
    f.estimate = shots == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(shots);
    f.std_error = shots == 0 ? 0.0 : std::sqrt(f.estimate * (1 - f.estimate) / static_cast<double>(shots));
    return f;
}

}  // namespace

bool PauliFrame::is_trivial() const {
    auto zero = [](uint32_t v) { return v == 0; };
    return std::all_of(a.begin(), a.end(), zero) && std::all_of(b.begin(), b.end(), zero);
}

void frame_conjugate(PauliFrame &f, const Gate &g) {
    const uint32_t d = f.d;
    auto neg = [d](uint32_t v) { return (d - v) % d; };
    const std::size_t i = g.q[0];
    switch (g.kind) {
        case GateKind::I:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::Y:
        case GateKind::W:
            // Weyl gates commute with Weyl errors up to phase.
            return;
        case GateKind::H: {
            uint32_t a = f.a[i];
            uint32_t b = f.b[i];
            f.a[i] = g.dagger ? b : neg(b);
            f.b[i] = g.dagger ? neg(a) : a;
            return;
        }
        case GateKind::S:
            f.b[i] = (f.b[i] + (g.dagger ? neg(f.a[i]) : f.a[i])) % d;
            return;
        case GateKind::CNOT: {
            const std::size_t t = g.q[1];
            if (g.dagger) {
                f.a[t] = (f.a[t] + neg(f.a[i])) % d;
                f.b[i] = (f.b[i] + f.b[t]) % d;
            } else {
                f.a[t] = (f.a[t] + f.a[i]) % d;
                f.b[i] = (f.b[i] + neg(f.b[t])) % d;
            }
            return;
        }
        case GateKind::CZ: {
            const std::size_t t = g.q[1];
            uint32_t ac = g.dagger ? neg(f.a[i]) : f.a[i];
            uint32_t at = g.dagger ? neg(f.a[t]) : f.a[t];
            f.b[i] = (f.b[i] + at) % d;
            f.b[t] = (f.b[t] + ac) % d;
            return;
        }
        case GateKind::SWAP:
            std::swap(f.a[i], f.a[g.q[1]]);
            std::swap(f.b[i], f.b[g.q[1]]);
            return;
    }
}

void apply_noise_direct(Tableau &t, const NoiseModel &model, std::size_t q, Rng &rng) {
    if (model.dim() != t.dim()) {
        throw DimensionMismatch("noise model dimension differs from the tableau");
    }
    auto [a, b] = model.sample(rng);
    t.apply_weyl(a, b, q);
}

ShotTable run_direct(const Circuit &c, std::size_t shots, const RunOptions &opts) {
    require_measurement(c);
    const bool prime = is_prime(c.dim());
    if (!prime) {
        require_terminal_measurements(c, "composite-dimension sampling");
    }
    const std::vector<std::size_t> measured = c.measured_qudits();
    ShotTable out(shots);
    parallel_for(shots, opts.workers, [&](std::size_t s) {
        Rng noise_rng = Rng::for_stream(opts.seed, Stream::kNoise, s);
        Rng meas_rng = Rng::for_stream(opts.seed, Stream::kMeasure, s);
        Tableau t(c.num_qudits(), c.dim());
        std::vector<uint32_t> row;
        row.reserve(measured.size());
        for (const auto &op : c.ops()) {
            if (const auto *g = std::get_if<Gate>(&op)) {
                t.apply(*g);
            } else if (const auto *noise = std::get_if<NoiseOp>(&op)) {
                apply_noise_direct(t, c.model(noise->model), noise->qudit, noise_rng);
            } else if (prime) {
                for (std::size_t q : std::get<MeasureOp>(op).qudits) {
                    row.push_back(t.measure(q, meas_rng).outcome);
                }
            }
        }
        if (!prime) {
            row = measure_terminal(std::move(t), measured, meas_rng);
        }
        out[s] = std::move(row);
    });
    return out;
}

ShotTable pauli_frame_run(const Circuit &c, std::size_t shots, const RunOptions &opts, bool randomize_b) {
    require_measurement(c);
    require_terminal_measurements(c, "Pauli-frame sampling");
    const std::vector<std::size_t> measured = c.measured_qudits();
    Rng ref_rng = Rng::for_stream(opts.seed, Stream::kReference, 0);
    const std::vector<uint32_t> reference = measure_terminal(clean_run(c), measured, ref_rng);
    const uint32_t d = c.dim();
    const std::size_t n = c.num_qudits();

    ShotTable out(shots);
    parallel_for(shots, opts.workers, [&](std::size_t s) {
        Rng noise_rng = Rng::for_stream(opts.seed, Stream::kNoise, s);
        PauliFrame f(n, d);
        if (randomize_b) {
            Rng init_rng = Rng::for_stream(opts.seed, Stream::kFrameInit, s);
            for (auto &b : f.b) {
                b = static_cast<uint32_t>(init_rng.uniform(d));
            }
        }
        for (const auto &op : c.ops()) {
            if (const auto *g = std::get_if<Gate>(&op)) {
                frame_conjugate(f, *g);
            } else if (const auto *noise = std::get_if<NoiseOp>(&op)) {
                auto [a, b] = c.model(noise->model).sample(noise_rng);
                f.a[noise->qudit] = (f.a[noise->qudit] + a) % d;
                f.b[noise->qudit] = (f.b[noise->qudit] + b) % d;
            }
        }
        std::vector<uint32_t> row(measured.size());
        for (std::size_t k = 0; k < measured.size(); ++k) {
            row[k] = (reference[k] + f.a[measured[k]]) % d;
        }
        out[s] = std::move(row);
    });
    return out;
}

PushPlan build_push_plan(const Circuit &c) {
    require_terminal_measurements(c, "noise pushing");
    PushPlan plan{Tableau(c.num_qudits(), c.dim()), {}, c.models(), c.measured_qudits(), std::nullopt};
    for (const auto &op : c.ops()) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            plan.clean.apply(*g);
        } else if (const auto *noise = std::get_if<NoiseOp>(&op)) {
            PushSite site;
            site.model = noise->model;
            site.qudit = noise->qudit;
            for (const auto &row : plan.clean.rows()) {
                site.x.push_back(row.x[noise->qudit]);
                site.z.push_back(row.z[noise->qudit]);
            }
            plan.sites.push_back(std::move(site));
        }
    }
    if (!is_prime(c.dim())) {
        plan.snf = SnfSampler::build(plan.clean);
    }
    return plan;
}

std::vector<uint32_t> PushPlan::delta_for(const std::vector<std::pair<uint32_t, uint32_t>> &draws) const {
    if (draws.size() != sites.size()) {
        throw DimensionMismatch("one draw per noise site expected");
    }
    const uint32_t d = clean.dim();
    std::vector<uint32_t> delta(clean.rows().size(), 0);
    for (std::size_t k = 0; k < sites.size(); ++k) {
        auto [a, b] = draws[k];
        if (a == 0 && b == 0) {
            continue;
        }
        const PushSite &site = sites[k];
        for (std::size_t i = 0; i < delta.size(); ++i) {
            delta[i] = (delta[i] + weyl_phase_shift(a, b, site.x[i], site.z[i], d)) % (2 * d);
        }
    }
    return delta;
}

std::vector<uint32_t> PushPlan::draw_delta(Rng &noise_rng) const {
    std::vector<std::pair<uint32_t, uint32_t>> draws;
    draws.reserve(sites.size());
    for (const auto &site : sites) {
        draws.push_back(models[site.model].sample(noise_rng));
    }
    return delta_for(draws);
}

PushResult push_sample(const PushPlan &plan, std::size_t shots, const RunOptions &opts) {
    if (plan.measured.empty()) {
        throw NoMeasurement("circuit has no measurement");
    }
    const std::size_t n = plan.clean.num_qudits();
    PushResult result;
    result.delta_tau.resize(shots);
    result.outcomes.resize(shots);
    parallel_for(shots, opts.workers, [&](std::size_t s) {
        Rng noise_rng = Rng::for_stream(opts.seed, Stream::kNoise, s);
        Rng meas_rng = Rng::for_stream(opts.seed, Stream::kMeasure, s);
        std::vector<uint32_t> delta = plan.draw_delta(noise_rng);
        if (plan.snf.has_value()) {
            std::span<const uint32_t> stab_delta(delta.data() + n, n);
            SnfSampler shifted = plan.snf->with_phase_shift(stab_delta);
            std::vector<uint32_t> full(n);
            shifted.sample_into(meas_rng, full.data());
            result.outcomes[s] = pick(full, plan.measured);
        } else {
            Tableau noisy = plan.clean;
            noisy.shift_phases(delta);
            result.outcomes[s] = noisy.measure_subset(plan.measured, meas_rng);
        }
        result.delta_tau[s] = std::move(delta);
    });
    return result;
}

ShotTable sample(const Circuit &c, Strategy strategy, std::size_t shots, const RunOptions &opts) {
    switch (strategy) {
        case Strategy::kDirect:
            return run_direct(c, shots, opts);
        case Strategy::kFrames:
            return pauli_frame_run(c, shots, opts);
        case Strategy::kPush:
            require_measurement(c);
            return push_sample(build_push_plan(c), shots, opts).outcomes;
    }
    throw Error("unknown strategy");
}

FidelityEstimate fidelity_push(const Circuit &c, std::size_t shots, const RunOptions &opts) {
    const PushPlan plan = build_push_plan(c);
    const std::size_t n = c.num_qudits();
    std::vector<uint8_t> ok(shots, 0);
    parallel_for(shots, opts.workers, [&](std::size_t s) {
        Rng noise_rng = Rng::for_stream(opts.seed, Stream::kNoise, s);
        std::vector<uint32_t> delta = plan.draw_delta(noise_rng);
        ok[s] = std::all_of(delta.begin() + static_cast<std::ptrdiff_t>(n), delta.end(),
                            [](uint32_t v) { return v == 0; });
    });
    return summarize(std::accumulate(ok.begin(), ok.end(), std::size_t{0}), shots);
}

FidelityEstimate fidelity_frames(const Circuit &c, std::size_t shots, const RunOptions &opts,
                                 FrameCriterion criterion) {
    require_terminal_measurements(c, "frame fidelity");
    const Tableau clean = clean_run(c);
    const std::size_t n = c.num_qudits();
    const uint32_t d = c.dim();
    std::vector<uint8_t> ok(shots, 0);
    parallel_for(shots, opts.workers, [&](std::size_t s) {
        Rng noise_rng = Rng::for_stream(opts.seed, Stream::kNoise, s);
        PauliFrame f(n, d);
        for (const auto &op : c.ops()) {
            if (const auto *g = std::get_if<Gate>(&op)) {
                frame_conjugate(f, *g);
            } else if (const auto *noise = std::get_if<NoiseOp>(&op)) {
                auto [a, b] = c.model(noise->model).sample(noise_rng);
                f.a[noise->qudit] = (f.a[noise->qudit] + a) % d;
                f.b[noise->qudit] = (f.b[noise->qudit] + b) % d;
            }
        }
        if (criterion == FrameCriterion::kTrivialFrame) {
            ok[s] = f.is_trivial();
            return;
        }
        PauliRow w(d, f.a, f.b, 0);
        bool commutes = true;
        for (std::size_t j = 0; j < n && commutes; ++j) {
            commutes = symplectic_product(w, clean.stabilizer(j)) == 0;
        }
        ok[s] = commutes;
    });
    return summarize(std::accumulate(ok.begin(), ok.end(), std::size_t{0}), shots);
}

Circuit mirror_circuit(const Circuit &c) {
    Circuit forward(c.num_qudits(), c.dim(), c.name());
    Circuit gates(c.num_qudits(), c.dim());
    std::vector<std::size_t> measured;
    for (const auto &op : c.ops()) {
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            measured.insert(measured.end(), m->qudits.begin(), m->qudits.end());
            continue;
        }
        if (const auto *noise = std::get_if<NoiseOp>(&op)) {
            forward.noise(c.model(noise->model), noise->qudit);
            continue;
        }
        forward.append(op);
        gates.append(op);
    }
    Circuit out = compose(forward, gates.inverse());
    if (!measured.empty()) {
        out.measure(std::move(measured));
    }
    return out;
}

std::map<std::vector<uint32_t>, double> exact_outcome_distribution(const Tableau &t,
                                                                   const std::vector<std::size_t> &measured) {
    std::map<std::vector<uint32_t>, double> full;
    if (is_prime(t.dim())) {
        Rng rng(0);
        AffineSampler s = build_affine_sampler(t, rng);
        auto points = s.orbit();
        for (auto &p : points) {
            full[std::move(p)] += 1.0 / static_cast<double>(points.size());
        }
    } else {
        full = SnfSampler::build(t).distribution();
    }
    std::map<std::vector<uint32_t>, double> out;
    for (const auto &[m, w] : full) {
        out[pick(m, measured)] += w;
    }
    return out;
}

std::map<std::vector<uint32_t>, double> enumerate_noisy_distribution(const Circuit &c, std::size_t max_patterns) {
    require_measurement(c);
    const PushPlan plan = build_push_plan(c);
    std::vector<std::vector<std::pair<std::pair<uint32_t, uint32_t>, double>>> supports;
    double patterns = 1;
    for (const auto &site : plan.sites) {
        supports.push_back(plan.models[site.model].support());
        patterns *= static_cast<double>(supports.back().size());
    }
    if (patterns > static_cast<double>(max_patterns)) {
        throw TooLarge("too many error patterns to enumerate");
    }

    std::map<std::vector<uint32_t>, double> out;
    std::vector<std::size_t> idx(plan.sites.size(), 0);
    std::vector<std::pair<uint32_t, uint32_t>> draws(plan.sites.size());
    while (true) {
        double weight = 1;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            draws[k] = supports[k][idx[k]].first;
            weight *= supports[k][idx[k]].second;
        }
        Tableau noisy = plan.clean;
        noisy.shift_phases(plan.delta_for(draws));
        for (const auto &[m, p] : exact_outcome_distribution(noisy, plan.measured)) {
            out[m] += weight * p;
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == supports[k].size()) {
            idx[k++] = 0;
        }
        if (k == idx.size()) {
            break;
        }
    }
    return out;
}

}  // namespace qtab
