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

#include "qtab/gate.h"

#include <charconv>
#include <utility>

#include "qtab/errors.h"

namespace qtab {

namespace {

// I and SWAP are self-inverse; their daggered forms are stored undaggered.
bool keeps_dagger(GateKind kind) {
    return kind != GateKind::I && kind != GateKind::SWAP;
}

}  // namespace

Gate Gate::single(GateKind kind, std::size_t target, bool dagger) {
    Gate g;
    g.kind = kind;
    g.dagger = dagger && keeps_dagger(kind);
    g.q = {target, 0};
    return g;
}

Gate Gate::pair(GateKind kind, std::size_t control, std::size_t target, bool dagger) {
    Gate g;
    g.kind = kind;
    g.dagger = dagger && keeps_dagger(kind);
    g.q = {control, target};
    return g;
}

Gate Gate::weyl(uint32_t a, uint32_t b, std::size_t target, bool dagger) {
    Gate g = single(GateKind::W, target, dagger);
    g.a = a;
    g.b = b;
    return g;
}

Gate Gate::inverse() const {
    Gate g = *this;
    g.dagger = !dagger && keeps_dagger(kind);
    return g;
}

namespace {

constexpr std::pair<std::string_view, GateKind> kNames[] = {
    {"I", GateKind::I},       {"X", GateKind::X},   {"Z", GateKind::Z},   {"Y", GateKind::Y},
    {"H", GateKind::H},       {"S", GateKind::S},   {"CNOT", GateKind::CNOT}, {"CX", GateKind::CNOT},
    {"CZ", GateKind::CZ},     {"SWAP", GateKind::SWAP},
};

std::string_view base_name(GateKind kind) {
    switch (kind) {
        case GateKind::I:
            return "I";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::Y:
            return "Y";
        case GateKind::W:
            return "W";
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CZ:
            return "CZ";
        case GateKind::SWAP:
            return "SWAP";
    }
    return "?";
}

bool parse_u32(std::string_view s, uint32_t &out) {
    if (s.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string Gate::name() const {
    std::string out(base_name(kind));
    if (kind == GateKind::W) {
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    if (dagger) {
        out += "DAG";
    }
    return out;
}

std::optional<Gate> parse_gate_name(std::string_view text) {
    bool dagger = false;
    if (text.size() > 3 && text.substr(text.size() - 3) == "DAG") {
        dagger = true;
        text.remove_suffix(3);
    }
    if (text.size() >= 2 && text.front() == 'W' && text[1] == '(' && text.back() == ')') {
        std::string_view args = text.substr(2, text.size() - 3);
        auto comma = args.find(',');
        if (comma == std::string_view::npos) {
            return std::nullopt;
        }
        uint32_t a, b;
        if (!parse_u32(args.substr(0, comma), a) || !parse_u32(args.substr(comma + 1), b)) {
            return std::nullopt;
        }
        return Gate::weyl(a, b, 0, dagger);
    }
    for (const auto &[name, kind] : kNames) {
        if (name == text) {
            Gate g;
            g.kind = kind;
            g.dagger = dagger && keeps_dagger(kind);
            return g;
        }
    }
    return std::nullopt;
}

void apply_gate_to_row(PauliRow &row, const Gate &g) {
    const uint32_t d = row.d;
    const uint32_t two_d = 2 * d;
    auto neg = [d](uint32_t v) { return v == 0 ? 0 : d - v; };
    auto add_d = [d](uint32_t u, uint32_t v) { return static_cast<uint32_t>((uint64_t{u} + v) % d); };
    auto add_phase = [&row, two_d](uint64_t v) { row.r = static_cast<uint32_t>((row.r + v % two_d) % two_d); };
    auto sub_phase = [&row, two_d](uint64_t v) {
        row.r = static_cast<uint32_t>((row.r + two_d - v % two_d) % two_d);
    };

    const std::size_t q0 = g.q[0];
    uint32_t &x = row.x[q0];
    uint32_t &z = row.z[q0];
    switch (g.kind) {
        case GateKind::I:
            return;
        case GateKind::X:
            // X Z^z X^-1 = w^-z Z^z.
            if (g.dagger) {
                add_phase(2 * uint64_t{z});
            } else {
                sub_phase(2 * uint64_t{z});
            }
            return;
        case GateKind::Z:
            if (g.dagger) {
                sub_phase(2 * uint64_t{x});
            } else {
                add_phase(2 * uint64_t{x});
            }
            return;
        case GateKind::Y: {
            uint32_t shift = weyl_phase_shift(1, 1, x, z, d);
            g.dagger ? sub_phase(shift) : add_phase(shift);
            return;
        }
        case GateKind::W: {
            uint32_t shift = weyl_phase_shift(g.a % d, g.b % d, x, z, d);
            g.dagger ? sub_phase(shift) : add_phase(shift);
            return;
        }
        case GateKind::H: {
            // Fourier conjugation: X -> Z, Z -> X^-1, with a -2xz phase correction
            // so that products of rows map to products of images.
            uint64_t xz = uint64_t{x} * z;
            uint32_t nx = g.dagger ? z : neg(z);
            uint32_t nz = g.dagger ? neg(x) : x;
            x = nx;
            z = nz;
            sub_phase(2 * xz);
            return;
        }
        case GateKind::S: {
            uint64_t delta = d % 2 == 0 ? uint64_t{x} * x : uint64_t{x} * (x + two_d - 1);
            if (g.dagger) {
                z = add_d(z, neg(x));
                sub_phase(delta);
            } else {
                z = add_d(z, x);
                add_phase(delta);
            }
            return;
        }
        case GateKind::CNOT: {
            uint32_t &xt = row.x[g.q[1]];
            uint32_t &zt = row.z[g.q[1]];
            if (g.dagger) {
                xt = add_d(xt, neg(x));
                z = add_d(z, zt);
            } else {
                xt = add_d(xt, x);
                z = add_d(z, neg(zt));
            }
            return;
        }
        case GateKind::CZ: {
            uint32_t &xt = row.x[g.q[1]];
            uint32_t &zt = row.z[g.q[1]];
            uint32_t xc = x;
            uint32_t xtv = xt;
            if (g.dagger) {
                z = add_d(z, neg(xtv));
                zt = add_d(zt, neg(xc));
                sub_phase(2 * uint64_t{xc} * xtv);
            } else {
                z = add_d(z, xtv);
                zt = add_d(zt, xc);
                add_phase(2 * uint64_t{xc} * xtv);
            }
            return;
        }
        case GateKind::SWAP:
            std::swap(row.x[g.q[0]], row.x[g.q[1]]);
            std::swap(row.z[g.q[0]], row.z[g.q[1]]);
            return;
    }
}

}  // namespace qtab
