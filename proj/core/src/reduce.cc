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

#include "qtab/errors.h"
#include "qtab/tableau.h"

namespace qtab {

namespace {

uint32_t entry(const PauliRow &row, std::size_t col) {
    const std::size_t n = row.num_qudits();
    return col < n ? row.x[col] : row.z[col - n];
}

PauliRow drop_column(const PauliRow &row, std::size_t q) {
    PauliRow out = row;
    out.x.erase(out.x.begin() + static_cast<std::ptrdiff_t>(q));
    out.z.erase(out.z.begin() + static_cast<std::ptrdiff_t>(q));
    return out;
}

/// Solves for destabilizers from scratch: row i must satisfy <<d_i, s_j>> = delta_ij.
std::vector<PauliRow> rebuild_destabilizers(const std::vector<PauliRow> &stab, uint32_t d) {
    const std::size_t n = stab.size();
    // Unknown y = (x | z); constraint j reads sum_i z_{j,i} x_i - x_{j,i} z_i = rhs_j.
    ResidueRows aug(n, std::vector<uint32_t>(3 * n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            aug[j][i] = stab[j].z[i];
            aug[j][n + i] = (d - stab[j].x[i]) % d;
        }
        aug[j][2 * n + j] = 1;
    }
    RrefResult rr = rref_mod_p(aug, d);
    if (rr.rank != n || rr.pivots.back() >= 2 * n) {
        throw InvalidTableau("stabilizer rows are dependent");
    }
    std::vector<PauliRow> out;
    for (std::size_t i = 0; i < n; ++i) {
        PauliRow row(n, d);
        for (std::size_t k = 0; k < n; ++k) {
            uint32_t v = rr.rows[k][2 * n + i];
            std::size_t col = rr.pivots[k];
            (col < n ? row.x[col] : row.z[col - n]) = v;
        }
        out.push_back(std::move(row));
    }
    return out;
}

/// Restores the canonical pairing and mutual commutation of destabilizers without
/// touching the stabilizers. Leaves an already valid tableau unchanged.
void repair_destabilizers(std::vector<PauliRow> &destab, const std::vector<PauliRow> &stab, uint32_t d) {
    const std::size_t n = stab.size();
    ResidueRows aug(n, std::vector<uint32_t>(2 * n, 0));
    bool identity = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = symplectic_product(destab[i], stab[j]);
            identity = identity && aug[i][j] == (i == j ? 1u : 0u);
        }
        aug[i][n + i] = 1;
    }
    if (!identity) {
        RrefResult rr = rref_mod_p(aug, d);
        if (rr.rank == n && rr.pivots.back() == n - 1) {
            std::vector<PauliRow> next;
            for (std::size_t i = 0; i < n; ++i) {
                PauliRow row = PauliRow::identity(n, d);
                for (std::size_t k = 0; k < n; ++k) {
                    if (uint32_t c = rr.rows[i][n + k]; c != 0) {
                        compose_into(row, row_power(destab[k], c));
                    }
                }
                next.push_back(std::move(row));
            }
            destab = std::move(next);
        } else {
            destab = rebuild_destabilizers(stab, d);
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t a = 0; a < c; ++a) {
            if (uint32_t mu = symplectic_product(destab[c], destab[a]); mu != 0) {
                compose_into(destab[c], row_power(stab[a], mu));
            }
        }
    }
}

}  // namespace

Tableau reduce_after_measurement(const Tableau &t, std::size_t q, const MeasurementResult &m) {
    const std::size_t n = t.num_qudits();
    const uint32_t d = t.dim();
    if (!is_prime(d)) {
        throw CompositeDimension("tableau reduction needs prime d");
    }
    if (!t.full()) {
        throw NotFullTableau("tableau reduction needs destabilizer rows");
    }
    if (q >= n) {
        throw IndexOutOfRange("qudit " + std::to_string(q) + " out of range");
    }
    if (n < 2) {
        throw InvalidDimension("cannot reduce a single-qudit tableau");
    }

    std::vector<PauliRow> destab(t.rows().begin(), t.rows().begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<PauliRow> stab(t.rows().begin() + static_cast<std::ptrdiff_t>(n), t.rows().end());
    std::size_t drop = n;

    if (m.random) {
        // The measured row tau^{-2k} Z_q clears column q from every other stabilizer.
        drop = m.pivot;
        const PauliRow meas = stab[drop];
        if (!meas.is_diagonal() || meas.z[q] != 1) {
            throw InvalidTableau("pivot row is not the measurement operator of qudit " + std::to_string(q));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (uint32_t z = stab[j].z[q]; j != drop && z != 0) {
                compose_into(stab[j], row_power(meas, d - z));
            }
        }
    } else {
        const PauliRow g = t.deterministic_row(q);
        for (auto &s : stab) {
            if (uint32_t z = s.z[q]; z != 0) {
                compose_into(s, row_power(g, d - z));
            }
        }
        // Column q is now clear, so the stabilizer block has a dependent row.
        // Forward elimination finds it; dual updates keep the destabilizer pairing.
        std::vector<bool> used(n, false);
        for (std::size_t col = 0; col < 2 * n; ++col) {
            std::size_t p = n;
            for (std::size_t j = 0; j < n; ++j) {
                if (!used[j] && entry(stab[j], col) != 0) {
                    p = j;
                    break;
                }
            }
            if (p == n) {
                continue;
            }
            used[p] = true;
            const uint32_t inv = mod_inverse(entry(stab[p], col), d);
            for (std::size_t j = 0; j < n; ++j) {
                uint32_t w = entry(stab[j], col);
                if (used[j] || w == 0) {
                    continue;
                }
                uint32_t lambda = static_cast<uint32_t>(uint64_t{w} * inv % d);
                compose_into(stab[j], row_power(stab[p], d - lambda));
                compose_into(destab[p], row_power(destab[j], lambda));
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!used[j]) {
                if (!stab[j].is_identity()) {
                    throw InvalidTableau("dependent stabilizer row did not reduce to the identity");
                }
                drop = j;
                break;
            }
        }
        if (drop == n) {
            throw InvalidTableau("no dependent stabilizer row after clearing qudit " + std::to_string(q));
        }
    }

    std::vector<PauliRow> new_destab, new_stab;
    for (std::size_t j = 0; j < n; ++j) {
        if (j != drop) {
            new_destab.push_back(drop_column(destab[j], q));
            new_stab.push_back(drop_column(stab[j], q));
        }
    }
    repair_destabilizers(new_destab, new_stab, d);
    Tableau out = Tableau::from_rows(d, std::move(new_destab), std::move(new_stab));
    out.check_valid();
    return out;
}

}  // namespace qtab
