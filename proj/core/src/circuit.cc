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

#include "qtab/circuit.h"

#include <algorithm>

#include "qtab/errors.h"
#include "qtab/modular.h"

namespace qtab {

Circuit::Circuit(std::size_t n, uint32_t d, std::string name) : n_(n), d_(d) {
    check_dimension(d);
    if (n == 0) {
        throw InvalidDimension("a circuit needs at least one qudit");
    }
    set_name(std::move(name));
}

void Circuit::set_name(std::string name) {
    if (name.find_first_of("\r\n") != std::string::npos) {
        throw Error("circuit names must fit on one line");
    }
    name_ = std::move(name);
}

std::size_t Circuit::add_model(const NoiseModel &m) {
    if (m.dim() != d_) {
        throw DimensionMismatch("noise model dimension " + std::to_string(m.dim()) + " differs from circuit dimension " +
                                std::to_string(d_));
    }
    for (std::size_t i = 0; i < models_.size(); ++i) {
        if (models_[i] == m) {
            return i;
        }
    }
    models_.push_back(m);
    return models_.size() - 1;
}

void Circuit::validate(const Op &op) const {
    auto check = [this](std::size_t q) {
        if (q >= n_) {
            throw IndexOutOfRange("qudit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qudits");
        }
    };
    if (const auto *g = std::get_if<Gate>(&op)) {
        check(g->q[0]);
        if (g->arity() == 2) {
            check(g->q[1]);
            if (g->q[0] == g->q[1]) {
                throw ControlEqualsTarget(g->name() + " needs two distinct qudits");
            }
        }
        if (g->kind == GateKind::W && (g->a >= d_ || g->b >= d_)) {
            throw IndexOutOfRange("W exponents must be below d = " + std::to_string(d_));
        }
    } else if (const auto *noise = std::get_if<NoiseOp>(&op)) {
        check(noise->qudit);
        if (noise->model >= models_.size()) {
            throw IndexOutOfRange("unknown noise model id " + std::to_string(noise->model));
        }
    } else {
        const auto &m = std::get<MeasureOp>(op);
        if (m.qudits.empty()) {
            throw IndexOutOfRange("measurement without qudits");
        }
        for (std::size_t q : m.qudits) {
            check(q);
        }
    }
}

Circuit &Circuit::append(const Op &op) {
    validate(op);
    ops_.push_back(op);
    return *this;
}

Circuit &Circuit::single_gate(GateKind kind, std::size_t q, bool dagger) {
    if (gate_arity(kind) != 1) {
        throw Error("two-qudit gate needs a control and a target");
    }
    return append(Gate::single(kind, q, dagger));
}

Circuit &Circuit::gate(GateKind kind, std::size_t control, std::size_t target, bool dagger) {
    if (gate_arity(kind) != 2) {
        throw Error("single-qudit gate given two qudits");
    }
    return append(Gate::pair(kind, control, target, dagger));
}

Circuit &Circuit::weyl(uint32_t a, uint32_t b, std::size_t q) {
    return append(Gate::weyl(a % d_, b % d_, q));
}

Circuit &Circuit::noise(const NoiseModel &m, std::size_t q) {
    return append(NoiseOp{add_model(m), q});
}

Circuit &Circuit::measure(std::vector<std::size_t> qudits) {
    return append(MeasureOp{std::move(qudits)});
}

Circuit &Circuit::measure_all() {
    std::vector<std::size_t> all(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        all[i] = i;
    }
    return measure(std::move(all));
}

void Circuit::insert(std::size_t index, const Op &op) {
    if (index > ops_.size()) {
        throw IndexOutOfRange("insert position " + std::to_string(index) + " past the end");
    }
    validate(op);
    ops_.insert(ops_.begin() + static_cast<std::ptrdiff_t>(index), op);
}

void Circuit::replace(std::size_t index, const Op &op) {
    if (index >= ops_.size()) {
        throw IndexOutOfRange("no op at position " + std::to_string(index));
    }
    validate(op);
    ops_[index] = op;
}

void Circuit::remove(std::size_t index) {
    if (index >= ops_.size()) {
        throw IndexOutOfRange("no op at position " + std::to_string(index));
    }
    ops_.erase(ops_.begin() + static_cast<std::ptrdiff_t>(index));
}

void Circuit::insert_noise_layer(std::size_t index, const NoiseModel &m) {
    if (index > ops_.size()) {
        throw IndexOutOfRange("insert position " + std::to_string(index) + " past the end");
    }
    std::size_t id = add_model(m);
    std::vector<Op> layer;
    for (std::size_t q = 0; q < n_; ++q) {
        layer.push_back(NoiseOp{id, q});
    }
    ops_.insert(ops_.begin() + static_cast<std::ptrdiff_t>(index), layer.begin(), layer.end());
}

void Circuit::add_noise_after_each_gate(const NoiseModel &m) {
    std::size_t id = add_model(m);
    std::vector<Op> out;
    out.reserve(2 * ops_.size());
    for (const auto &op : ops_) {
        out.push_back(op);
        if (const auto *g = std::get_if<Gate>(&op)) {
            out.push_back(NoiseOp{id, g->q[g->arity() - 1]});
        }
    }
    ops_ = std::move(out);
}

void Circuit::shift_noise_to_end() {
    std::vector<Op> gates, noise, tail;
    std::size_t last_non_measure = ops_.size();
    while (last_non_measure > 0 && std::holds_alternative<MeasureOp>(ops_[last_non_measure - 1])) {
        --last_non_measure;
    }
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const Op &op = ops_[i];
        if (i >= last_non_measure) {
            tail.push_back(op);
        } else if (std::holds_alternative<NoiseOp>(op)) {
            noise.push_back(op);
        } else {
            gates.push_back(op);
        }
    }
    ops_ = std::move(gates);
    ops_.insert(ops_.end(), noise.begin(), noise.end());
    ops_.insert(ops_.end(), tail.begin(), tail.end());
}

Circuit Circuit::realize_noise(Rng &rng) const {
    Circuit out(n_, d_, name_);
    for (const auto &op : ops_) {
        if (const auto *noise = std::get_if<NoiseOp>(&op)) {
            auto [a, b] = models_[noise->model].sample(rng);
            if (a != 0 || b != 0) {
                out.append(Gate::weyl(a, b, noise->qudit));
            }
        } else {
            out.append(op);
        }
    }
    return out;
}

Circuit Circuit::inverse() const {
    Circuit out(n_, d_, name_);
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        const auto *g = std::get_if<Gate>(&*it);
        if (g == nullptr) {
            throw NotInvertibleCircuit("only gate sequences can be inverted");
        }
        out.append(g->inverse());
    }
    return out;
}

Circuit Circuit::mirror() const {
    return compose(*this, inverse());
}

std::size_t Circuit::gate_count() const {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const Op &op) { return std::holds_alternative<Gate>(op); }));
}

std::size_t Circuit::noise_count() const {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const Op &op) { return std::holds_alternative<NoiseOp>(op); }));
}

bool Circuit::has_measurement() const {
    return std::any_of(ops_.begin(), ops_.end(), [](const Op &op) { return std::holds_alternative<MeasureOp>(op); });
}

std::vector<std::size_t> Circuit::measured_qudits() const {
    std::vector<std::size_t> out;
    for (const auto &op : ops_) {
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            out.insert(out.end(), m->qudits.begin(), m->qudits.end());
        }
    }
    return out;
}

bool Circuit::measurements_are_terminal() const {
    bool seen = false;
    for (const auto &op : ops_) {
        if (std::holds_alternative<MeasureOp>(op)) {
            seen = true;
        } else if (seen) {
            return false;
        }
    }
    return true;
}

bool Circuit::operator==(const Circuit &other) const {
    if (n_ != other.n_ || d_ != other.d_ || name_ != other.name_ || ops_.size() != other.ops_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const auto *a = std::get_if<NoiseOp>(&ops_[i]);
        const auto *b = std::get_if<NoiseOp>(&other.ops_[i]);
        if (a != nullptr && b != nullptr) {
            if (a->qudit != b->qudit || !(models_[a->model] == other.models_[b->model])) {
                return false;
            }
        } else if (!(ops_[i] == other.ops_[i])) {
            return false;
        }
    }
    return true;
}

Circuit compose(const Circuit &c1, const Circuit &c2) {
    if (c1.num_qudits() != c2.num_qudits() || c1.dim() != c2.dim()) {
        throw DimensionMismatch("composed circuits differ in qudit count or dimension");
    }
    Circuit out = c1;
    for (const auto &op : c2.ops()) {
        if (const auto *noise = std::get_if<NoiseOp>(&op)) {
            out.noise(c2.model(noise->model), noise->qudit);
        } else {
            out.append(op);
        }
    }
    return out;
}

Circuit random_clifford_circuit(std::size_t n, uint32_t d, std::size_t gates, Rng &rng) {
    static constexpr GateKind kSingle[] = {GateKind::X, GateKind::Z, GateKind::Y, GateKind::W, GateKind::H, GateKind::S};
    static constexpr GateKind kPair[] = {GateKind::CNOT, GateKind::CZ, GateKind::SWAP};
    Circuit c(n, d);
    for (std::size_t i = 0; i < gates; ++i) {
        const bool dagger = rng.uniform(2) == 1;
        const std::size_t single_count = std::size(kSingle);
        const std::size_t choices = n >= 2 ? single_count + std::size(kPair) : single_count;
        const std::size_t pick = rng.uniform(choices);
        if (pick < single_count) {
            GateKind kind = kSingle[pick];
            std::size_t q = rng.uniform(n);
            if (kind == GateKind::W) {
                c.append(Gate::weyl(static_cast<uint32_t>(rng.uniform(d)), static_cast<uint32_t>(rng.uniform(d)), q,
                                    dagger));
            } else {
                c.gate(kind, q, dagger);
            }
        } else {
            std::size_t a = rng.uniform(n);
            std::size_t b = rng.uniform(n - 1);
            if (b >= a) {
                ++b;
            }
            c.gate(kPair[pick - single_count], a, b, dagger);
        }
    }
    return c;
}

}  // namespace qtab
