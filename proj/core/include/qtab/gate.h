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


#ifndef QTAB_GATE_H
#define QTAB_GATE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qtab/weyl.h"

namespace qtab {

enum class GateKind : uint8_t {
    I,
    X,
    Z,
    Y,
    W,
    H,
    S,
    CNOT,
    CZ,
    SWAP,
};

constexpr std::size_t gate_arity(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::SWAP ? 2 : 1;
}

/// A Clifford gate instance. For two-qudit gates q[0] is the control and q[1] the target.
/// W carries its Weyl exponents in (a, b); they are ignored for every other kind.
struct Gate {
    GateKind kind = GateKind::I;
    bool dagger = false;
    uint32_t a = 0;
    uint32_t b = 0;
    std::array<std::size_t, 2> q{};

    static Gate single(GateKind kind, std::size_t target, bool dagger = false);
    static Gate pair(GateKind kind, std::size_t control, std::size_t target, bool dagger = false);
    static Gate weyl(uint32_t a, uint32_t b, std::size_t target, bool dagger = false);

    std::size_t arity() const {
        return gate_arity(kind);
    }
    Gate inverse() const;
    /// Mnemonic as written in circuit text, e.g. "H", "SDAG", "W(1,2)".
    std::string name() const;

    bool operator==(const Gate &) const = default;
};

/// Parses a mnemonic (without qudit arguments). Returns nullopt for unknown names.
std::optional<Gate> parse_gate_name(std::string_view text);

/// Conjugates one tableau row by the gate: row <- G row G^dagger.
/// This is the only place the symplectic-and-phase update rules live.
void apply_gate_to_row(PauliRow &row, const Gate &g);

/// Phase increment 2(b x - a z) that conjugation by W(a, b) on qudit q adds to a row.
inline uint32_t weyl_phase_shift(uint32_t a, uint32_t b, uint32_t xq, uint32_t zq, uint32_t d) {
    const uint64_t two_d = 2 * uint64_t{d};
    return static_cast<uint32_t>((2 * (uint64_t{b} * xq + (two_d - a) * zq)) % two_d);
}

}  // namespace qtab

#endif
