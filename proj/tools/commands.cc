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

#include "commands.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qtab/circuit.h"
#include "qtab/dense.h"
#include "qtab/errors.h"
#include "qtab/noise.h"
#include "qtab/parallel.h"
#include "qtab/tableau.h"

namespace qtab::cli {

namespace {

Circuit load_circuit(const std::string &path) {
    if (path.empty()) {
        throw std::invalid_argument("--input is required");
    }
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return Circuit::parse(buf.str());
}

Strategy parse_strategy(const std::string &s) {
    if (s == "direct") {
        return Strategy::kDirect;
    }
    if (s == "frames") {
        return Strategy::kFrames;
    }
    if (s == "push") {
        return Strategy::kPush;
    }
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

/// Samples terminal measurements from the exact density matrix.
ShotTable dense_sample(const Circuit &c, std::size_t shots, const RunOptions &opts) {
    if (!c.has_measurement()) {
        throw NoMeasurement("circuit has no measurement");
    }
    if (!c.measurements_are_terminal()) {
        throw Unsupported("the dense backend samples terminal measurements only");
    }
    const auto measured = c.measured_qudits();
    const auto probs = born_distribution(dense_run_mixed(c), measured);
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    const uint32_t d = c.dim();
    ShotTable out(shots);
    parallel_for(shots, opts.workers, [&](std::size_t s) {
        Rng rng = Rng::for_stream(opts.seed, Stream::kMeasure, s);
        double u = rng.uniform01() * cumulative.back();
        std::size_t idx = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                                   cumulative.begin());
        idx = std::min(idx, cumulative.size() - 1);
        std::vector<uint32_t> row(measured.size());
        for (auto &v : row) {
            v = static_cast<uint32_t>(idx % d);
            idx /= d;
        }
        out[s] = std::move(row);
    });
    return out;
}

void check_tableau_support(const Circuit &c, Strategy strategy) {
    if (!c.measurements_are_terminal() && (strategy != Strategy::kDirect || !is_prime(c.dim()))) {
        throw Unsupported("mid-circuit measurements need the direct strategy and prime d");
    }
}

void write_shots(const Circuit &c, const ShotTable &shots, const std::string &format, std::ostream &out) {
    const auto measured = c.measured_qudits();
    if (format == "csv") {
        for (std::size_t k = 0; k < measured.size(); ++k) {
            out << (k == 0 ? "" : ",") << "q" << measured[k];
        }
        out << "\n";
        for (const auto &row : shots) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                out << (k == 0 ? "" : ",") << row[k];
            }
            out << "\n";
        }
    } else if (format == "json") {
        nlohmann::json j;
        j["qudits"] = measured;
        j["shots"] = shots;
        out << j.dump() << "\n";
    } else if (format == "text") {
        for (const auto &row : shots) {
            out << "[";
            for (std::size_t k = 0; k < row.size(); ++k) {
                out << (k == 0 ? "" : " ") << row[k];
            }
            out << "]\n";
        }
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
}

Circuit gates_only(const Circuit &c) {
    Circuit out(c.num_qudits(), c.dim(), c.name());
    for (const auto &op : c.ops()) {
        if (std::holds_alternative<Gate>(op)) {
            out.append(op);
        }
    }
    return out;
}

std::string title(const Circuit &c) {
    return c.name().empty() ? "Tableau" : c.name() + " tableau";
}

}  // namespace

Sweep parse_sweep(const std::string &text) {
    Sweep s;
    auto first = text.find(':');
    auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos) {
        throw std::invalid_argument("--sweep expects p0:p1:steps");
    }
    try {
        s.p0 = std::stod(text.substr(0, first));
        s.p1 = std::stod(text.substr(first + 1, second - first - 1));
        long long steps = std::stoll(text.substr(second + 1));
        if (steps < 1) {
            throw std::invalid_argument("steps");
        }
        s.steps = static_cast<std::size_t>(steps);
    } catch (const std::logic_error &) {
        throw std::invalid_argument("--sweep expects p0:p1:steps with steps >= 1");
    }
    return s;
}

std::vector<uint32_t> parse_replay(const std::string &text) {
    std::vector<uint32_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        uint32_t v;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size()) {
            throw std::invalid_argument("--replay expects comma-separated outcomes, got '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

void cmd_run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const Circuit c = load_circuit(cfg.input);
    if (cfg.backend != "tableau") {
        throw Unsupported("run renders tableaus; use the tableau backend");
    }
    const bool prime = is_prime(c.dim());
    if (cfg.reduce && !prime) {
        throw Unsupported("--reduce needs prime d: composite dimensions support sampling only, not post-measurement "
                          "tableaus (d = " +
                          std::to_string(c.dim()) + ")");
    }
    if (!prime && c.has_measurement()) {
        throw Unsupported("run shows post-measurement tableaus, which need prime d; use 'sample' for d = " +
                          std::to_string(c.dim()));
    }
    if (cfg.draw) {
        out << c.render_ascii() << "\n";
    }

    Rng noise_rng = Rng::for_stream(cfg.seed, Stream::kNoise, 0);
    Rng meas_rng = Rng::for_stream(cfg.seed, Stream::kMeasure, 0);
    Tableau t(c.num_qudits(), c.dim());
    std::vector<uint32_t> results;
    bool shown = false;
    std::size_t replay_index = 0;

    for (const auto &op : c.ops()) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            t.apply(*g);
        } else if (const auto *noise = std::get_if<NoiseOp>(&op)) {
            apply_noise_direct(t, c.model(noise->model), noise->qudit, noise_rng);
        } else {
            if (!shown) {
                out << title(c) << "\n" << t.str() << "\n";
                shown = true;
            }
            for (std::size_t q : std::get<MeasureOp>(op).qudits) {
                std::optional<uint32_t> forced;
                if (replay_index < cfg.replay.size()) {
                    forced = cfg.replay[replay_index];
                }
                ++replay_index;
                MeasurementResult m = t.measure(q, meas_rng, forced);
                if (forced.has_value() && !m.random && *forced % c.dim() != m.outcome) {
                    err << "warning: measurement " << replay_index - 1 << " of qudit " << q
                        << " is deterministic; replay value " << *forced << " ignored (outcome " << m.outcome
                        << ")\n";
                }
                results.push_back(m.outcome);
            }
        }
    }
    if (replay_index < cfg.replay.size()) {
        err << "warning: " << cfg.replay.size() - replay_index << " replay value(s) left unused\n";
    }

    if (!shown) {
        out << title(c) << "\n" << t.str();
        return;
    }
    out << "Post-measurement tableau\n" << t.str() << "\n";
    out << "Measurement result: [";
    for (std::size_t i = 0; i < results.size(); ++i) {
        out << (i == 0 ? "" : " ") << results[i];
    }
    out << "]\n";

    if (cfg.reduce) {
        // Each measured qudit is deterministic now; reduce them from the highest index down.
        auto measured = c.measured_qudits();
        std::sort(measured.begin(), measured.end());
        measured.erase(std::unique(measured.begin(), measured.end()), measured.end());
        std::size_t dropped = 0;
        for (auto it = measured.rbegin(); it != measured.rend() && t.num_qudits() > 1; ++it) {
            MeasurementResult m = t.measure(*it, meas_rng);
            t = reduce_after_measurement(t, *it, m);
            ++dropped;
        }
        out << "\nReduced tableau (" << dropped << " measured qudit(s) removed)\n" << t.str();
    }
}

void cmd_sample(const RunConfig &cfg, std::ostream &out) {
    const Circuit c = load_circuit(cfg.input);
    RunOptions opts{cfg.seed, cfg.workers};
    ShotTable shots;
    if (cfg.backend == "dense") {
        shots = dense_sample(c, cfg.shots, opts);
    } else if (cfg.backend == "tableau") {
        Strategy strategy = parse_strategy(cfg.strategy);
        check_tableau_support(c, strategy);
        shots = sample(c, strategy, cfg.shots, opts);
    } else {
        throw std::invalid_argument("unknown backend '" + cfg.backend + "'");
    }
    write_shots(c, shots, cfg.format, out);
}

void cmd_fidelity(const RunConfig &cfg, std::ostream &out) {
    const Circuit base = load_circuit(cfg.input);
    RunOptions opts{cfg.seed, cfg.workers};
    if (cfg.backend != "tableau" && cfg.backend != "dense") {
        throw std::invalid_argument("unknown backend '" + cfg.backend + "'");
    }
    if (!base.measurements_are_terminal()) {
        throw Unsupported("fidelity needs a gate and noise circuit with measurements, if any, at the end");
    }

    auto estimate = [&](const Circuit &c) {
        if (cfg.backend == "dense") {
            FidelityEstimate f;
            f.estimate = dense_fidelity(dense_run_mixed(c), dense_run(gates_only(c)));
            return f;
        }
        if (cfg.strategy == "frames") {
            return fidelity_frames(c, cfg.shots, opts);
        }
        if (cfg.strategy == "push") {
            return fidelity_push(c, cfg.shots, opts);
        }
        throw std::invalid_argument("fidelity supports the push and frames strategies, not '" + cfg.strategy + "'");
    };
    auto record = [](double p, const FidelityEstimate &f) {
        nlohmann::json j;
        if (!std::isnan(p)) {
            j["p"] = p;
        }
        j["estimate"] = f.estimate;
        j["stderr"] = f.std_error;
        j["shots"] = f.shots;
        return j;
    };

    nlohmann::json report;
    report["method"] = cfg.backend == "dense" ? std::string("dense") : cfg.strategy;
    if (!cfg.sweep.has_value()) {
        report.update(record(std::nan(""), estimate(base)));
    } else {
        nlohmann::json points = nlohmann::json::array();
        const Sweep &s = *cfg.sweep;
        for (std::size_t i = 0; i < s.steps; ++i) {
            double p = s.steps == 1 ? s.p0 : s.p0 + (s.p1 - s.p0) * static_cast<double>(i) / (s.steps - 1);
            Circuit c(base.num_qudits(), base.dim(), base.name());
            for (const auto &op : base.ops()) {
                if (const auto *noise = std::get_if<NoiseOp>(&op)) {
                    c.noise(base.model(noise->model).with_probability(p), noise->qudit);
                } else {
                    c.append(op);
                }
            }
            points.push_back(record(p, estimate(c)));
        }
        report["points"] = points;
    }
    out << report.dump() << "\n";
}

void cmd_bench(const RunConfig &cfg, std::ostream &out) {
    constexpr uint32_t kDim = 3;
    constexpr std::size_t kCircuits = 10;
    constexpr std::size_t kRepeats = 3;
    const NoiseModel noise = NoiseModel::depolarizing(0.01, kDim);
    const std::size_t shots = std::max<std::size_t>(cfg.shots, 1);
    RunOptions opts{cfg.seed, 1};

    struct Point {
        std::size_t n;
        std::size_t gates;
    };
    std::vector<Point> points;
    for (std::size_t g : {24, 48, 96, 192, 384}) {
        points.push_back({24, g});
    }
    for (std::size_t n : {4, 8, 12, 16, 24}) {
        points.push_back({n, n * n});
    }

    out << "n,G,strategy,seconds\n";
    for (const auto &pt : points) {
        for (const char *name : {"direct", "frames", "push", "affine"}) {
            double total = 0;
            for (std::size_t k = 0; k < kCircuits * kRepeats; ++k) {
                Rng rng = Rng::for_stream(cfg.seed, Stream::kMaster, pt.n * 100003 + pt.gates * 7 + k % kCircuits);
                Circuit c = random_clifford_circuit(pt.n, kDim, pt.gates, rng);
                std::string s = name;
                if (s != "affine") {
                    c.add_noise_after_each_gate(noise);
                }
                c.measure_all();
                auto start = std::chrono::steady_clock::now();
                if (s == "affine") {
                    Tableau t(pt.n, kDim);
                    for (const auto &op : c.ops()) {
                        if (const auto *g = std::get_if<Gate>(&op)) {
                            t.apply(*g);
                        }
                    }
                    AffineSampler sampler = build_affine_sampler(t, rng);
                    std::vector<uint32_t> buf(pt.n);
                    for (std::size_t i = 0; i < shots; ++i) {
                        sampler.sample_into(rng, buf.data());
                    }
                } else {
                    sample(c, parse_strategy(s), shots, opts);
                }
                total += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            }
            out << pt.n << "," << pt.gates << "," << name << "," << format_double(total / (kCircuits * kRepeats * shots))
                << "\n";
        }
    }
}

}  // namespace qtab::cli
