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

#include <algorithm>
#include <map>

#include "qtab/circuit.h"

namespace qtab {

namespace {

struct Column {
    std::map<std::size_t, std::string> cells;
};

}  // namespace

std::string Circuit::render_ascii() const {
    std::vector<Column> columns;
    // Index of the first free column on each wire.
    std::vector<std::size_t> frontier(n_, 0);

    auto place = [&](std::size_t lo, std::size_t hi, std::map<std::size_t, std::string> cells) {
        std::size_t col = 0;
        for (std::size_t q = lo; q <= hi; ++q) {
            col = std::max(col, frontier[q]);
        }
        if (col == columns.size()) {
            columns.emplace_back();
        }
        for (std::size_t q = lo; q <= hi; ++q) {
            frontier[q] = col + 1;
            columns[col].cells[q] = "|";
        }
        for (auto &[q, text] : cells) {
            columns[col].cells[q] = std::move(text);
        }
    };

    for (const auto &op : ops_) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            if (g->arity() == 1) {
                place(g->q[0], g->q[0], {{g->q[0], g->name()}});
                continue;
            }
            std::string control = "*";
            std::string target;
            switch (g->kind) {
                case GateKind::CNOT:
                    target = g->dagger ? "-" : "+";
                    break;
                case GateKind::CZ:
                    target = g->dagger ? "*DAG" : "*";
                    break;
                default:
                    control = target = "x";
                    break;
            }
            place(std::min(g->q[0], g->q[1]), std::max(g->q[0], g->q[1]), {{g->q[0], control}, {g->q[1], target}});
        } else if (const auto *noise = std::get_if<NoiseOp>(&op)) {
            place(noise->qudit, noise->qudit, {{noise->qudit, "~N" + std::to_string(noise->model)}});
        } else {
            // Each measured qudit gets its own "M"; no vertical link is drawn.
            for (std::size_t q : std::get<MeasureOp>(op).qudits) {
                place(q, q, {{q, "M"}});
            }
        }
    }

    std::vector<std::string> labels(n_);
    std::size_t label_width = 0;
    for (std::size_t q = 0; q < n_; ++q) {
        labels[q] = "q" + std::to_string(q) + ":";
        label_width = std::max(label_width, labels[q].size());
    }

    std::string out;
    for (std::size_t q = 0; q < n_; ++q) {
        std::string line = labels[q] + std::string(label_width - labels[q].size() + 1, ' ') + "-";
        for (const auto &col : columns) {
            std::size_t width = 1;
            for (const auto &[_, text] : col.cells) {
                width = std::max(width, text.size());
            }
            auto it = col.cells.find(q);
            std::string cell = it == col.cells.end() ? "" : it->second;
            line += cell + std::string(width - cell.size(), '-') + "-";
        }
        out += line + "\n";
    }
    if (!models_.empty()) {
        out += "noise:";
        for (std::size_t i = 0; i < models_.size(); ++i) {
            out += " N" + std::to_string(i) + "=" + models_[i].name();
        }
        out += "\n";
    }
    return out;
}

}  // namespace qtab
