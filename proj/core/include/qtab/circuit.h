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


#ifndef QTAB_CIRCUIT_H
#define QTAB_CIRCUIT_H

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qtab/gate.h"
#include "qtab/noise_model.h"
#include "qtab/rng.h"

namespace qtab {

/// A stochastic channel site: the circuit's model `model` acts on `qudit`.
struct NoiseOp {
    std::size_t model = 0;
    std::size_t qudit = 0;

    bool operator==(const NoiseOp &) const = default;
};

/// Computational-basis measurement of the listed qudits, in order.
struct MeasureOp {
    std::vector<std::size_t> qudits;

    bool operator==(const MeasureOp &) const = default;
};

using Op = std::variant<Gate, NoiseOp, MeasureOp>;

class Circuit {
   public:
    Circuit(std::size_t n, uint32_t d, std::string name = "");

    std::size_t num_qudits() const {
        return n_;
    }
    uint32_t dim() const {
        return d_;
    }
    const std::string &name() const {
        return name_;
    }
    void set_name(std::string name);
    const std::vector<Op> &ops() const {
        return ops_;
    }
    const std::vector<NoiseModel> &models() const {
        return models_;
    }
    const NoiseModel &model(std::size_t id) const {
        return models_.at(id);
    }

    /// Registers a model and returns its id; equal models share one id.
    std::size_t add_model(const NoiseModel &m);

    Circuit &append(const Op &op);
    /// The dagger flag must be a real bool so that gate(CNOT, 0, 1) picks the two-qudit form.
    template <std::same_as<bool> B = bool>
    Circuit &gate(GateKind kind, std::size_t q, B dagger = false) {
        return single_gate(kind, q, dagger);
    }
    Circuit &gate(GateKind kind, std::size_t control, std::size_t target, bool dagger = false);
    Circuit &weyl(uint32_t a, uint32_t b, std::size_t q);
    Circuit &noise(const NoiseModel &m, std::size_t q);
    Circuit &measure(std::vector<std::size_t> qudits);
    Circuit &measure_all();

    void insert(std::size_t index, const Op &op);
    void replace(std::size_t index, const Op &op);
    void remove(std::size_t index);
    /// Inserts one noise site per qudit before op `index`.
    void insert_noise_layer(std::size_t index, const NoiseModel &m);
    /// Adds one noise site right after every gate, on the gate's last qudit.
    void add_noise_after_each_gate(const NoiseModel &m);
    /// Moves every noise op behind the last gate, keeping trailing measurements last.
    /// This is a structural edit: it changes the channel the circuit describes.
    void shift_noise_to_end();
    /// Copy with every noise site replaced by a sampled W(a, b) gate; identity draws vanish.
    Circuit realize_noise(Rng &rng) const;

    /// Reversed gate sequence with every gate daggered. Throws NotInvertibleCircuit on noise or measurement.
    Circuit inverse() const;
    /// This circuit followed by its inverse.
    Circuit mirror() const;

    std::size_t gate_count() const;
    std::size_t noise_count() const;
    bool has_measurement() const;
    /// Qudits of all measure ops, concatenated in circuit order.
    std::vector<std::size_t> measured_qudits() const;
    /// True when every measure op comes after every gate and noise op.
    bool measurements_are_terminal() const;

    /// Line-oriented text: "QQC 1", "dim d", "qudits n", optional "name s", then one op per line.
    std::string serialize() const;
    /// Throws ParseError carrying the 1-based line number.
    static Circuit parse(const std::string &text);

    /// ASCII drawing: one wire per qudit, ops packed into as-soon-as-possible columns.
    std::string render_ascii() const;

    /// Structural equality; noise sites compare by model value, not by id.
    bool operator==(const Circuit &other) const;

   private:
    void validate(const Op &op) const;
    Circuit &single_gate(GateKind kind, std::size_t q, bool dagger);

    std::size_t n_;
    uint32_t d_;
    std::string name_;
    std::vector<Op> ops_;
    std::vector<NoiseModel> models_;
};

/// c1 followed by c2; models are merged.
Circuit compose(const Circuit &c1, const Circuit &c2);

/// Uniformly random gates from the full Clifford gate set, daggers included.
Circuit random_clifford_circuit(std::size_t n, uint32_t d, std::size_t gates, Rng &rng);

}  // namespace qtab

#endif
