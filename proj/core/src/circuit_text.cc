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

#include <charconv>
#include <optional>
#include <sstream>
#include <string_view>

#include "qtab/circuit.h"
#include "qtab/errors.h"
#include "qtab/modular.h"

namespace qtab {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename T>
bool parse_uint(std::string_view s, T &out) {
    if (s.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string Circuit::serialize() const {
    std::ostringstream out;
    out << "QQC 1\ndim " << d_ << "\nqudits " << n_ << "\n";
    if (!name_.empty()) {
        out << "name " << name_ << "\n";
    }
    for (const auto &op : ops_) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            out << g->name() << " " << g->q[0];
            if (g->arity() == 2) {
                out << " " << g->q[1];
            }
        } else if (const auto *noise = std::get_if<NoiseOp>(&op)) {
            out << "NOISE " << models_[noise->model].name() << " " << noise->qudit;
        } else {
            out << "M";
            for (std::size_t q : std::get<MeasureOp>(op).qudits) {
                out << " " << q;
            }
        }
        out << "\n";
    }
    return out.str();
}

Circuit Circuit::parse(const std::string &text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;

    // Header fields arrive in a fixed order; `stage` counts how many were read.
    int stage = 0;
    uint32_t d = 0;
    std::size_t n = 0;
    std::optional<Circuit> circuit;

    auto index = [&](std::string_view tok) {
        std::size_t q;
        if (!parse_uint(tok, q)) {
            throw ParseError(line_no, "bad qudit index '" + std::string(tok) + "'");
        }
        if (q >= n) {
            throw ParseError(line_no, "qudit index " + std::to_string(q) + " out of range for " + std::to_string(n) +
                                          " qudits");
        }
        return q;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto toks = split_ws(line);

        if (stage == 0) {
            if (toks.size() != 2 || toks[0] != "QQC" || toks[1] != "1") {
                throw ParseError(line_no, "missing 'QQC 1' header");
            }
            stage = 1;
            continue;
        }
        if (stage == 1) {
            if (toks.size() != 2 || toks[0] != "dim" || !parse_uint(toks[1], d)) {
                throw ParseError(line_no, "expected 'dim <d>'");
            }
            if (d < 2 || d > kMaxDimension) {
                throw ParseError(line_no, "dimension " + std::to_string(d) + " is outside [2, " +
                                              std::to_string(kMaxDimension) + "]");
            }
            stage = 2;
            continue;
        }
        if (stage == 2) {
            if (toks.size() != 2 || toks[0] != "qudits" || !parse_uint(toks[1], n) || n == 0) {
                throw ParseError(line_no, "expected 'qudits <n>' with n >= 1");
            }
            circuit.emplace(n, d);
            stage = 3;
            continue;
        }
        if (stage == 3 && toks[0] == "name") {
            circuit->set_name(std::string(trim(line.substr(4))));
            stage = 4;
            continue;
        }
        stage = 4;

        if (toks[0] == "M") {
            if (toks.size() < 2) {
                throw ParseError(line_no, "measurement needs at least one qudit");
            }
            std::vector<std::size_t> qs;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                qs.push_back(index(toks[i]));
            }
            circuit->measure(std::move(qs));
            continue;
        }
        if (toks[0] == "NOISE") {
            if (toks.size() != 3) {
                throw ParseError(line_no, "expected 'NOISE <MODEL>(<params>) <qudit>'");
            }
            std::size_t q = index(toks[2]);
            try {
                circuit->noise(NoiseModel::parse(std::string(toks[1]), d), q);
            } catch (const InvalidProbability &e) {
                throw ParseError(line_no, e.what());
            }
            continue;
        }

        auto gate = parse_gate_name(toks[0]);
        if (!gate.has_value()) {
            throw ParseError(line_no, "unknown gate '" + std::string(toks[0]) + "'");
        }
        if (toks.size() != 1 + gate->arity()) {
            throw ParseError(line_no, gate->name() + " takes " + std::to_string(gate->arity()) + " qudit(s)");
        }
        gate->q[0] = index(toks[1]);
        if (gate->arity() == 2) {
            gate->q[1] = index(toks[2]);
            if (gate->q[0] == gate->q[1]) {
                throw ParseError(line_no, "control equals target");
            }
        }
        if (gate->kind == GateKind::W && (gate->a >= d || gate->b >= d)) {
            throw ParseError(line_no, "W exponents must be below d = " + std::to_string(d));
        }
        circuit->append(*gate);
    }

    if (stage < 3) {
        throw ParseError(line_no == 0 ? 1 : line_no, stage == 0 ? "missing 'QQC 1' header" : "incomplete header");
    }
    return std::move(*circuit);
}

}  // namespace qtab
