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

#include "qtab/tableau.h"

#include <cstdio>
#include <sstream>

#include "qtab/dense.h"
#include "qtab/errors.h"

namespace qtab {

Tableau::Tableau(std::size_t n, uint32_t d, bool full) : n_(n), d_(d), full_(full) {
    check_dimension(d);
    if (n == 0) {
        throw InvalidDimension("a tableau needs at least one qudit");
    }
    rows_.reserve(full ? 2 * n : n);
    if (full) {
        for (std::size_t i = 0; i < n; ++i) {
            rows_.push_back(PauliRow::single_x(n, d, i));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        rows_.push_back(PauliRow::single_z(n, d, i));
    }
}

Tableau Tableau::from_rows(uint32_t d, std::vector<PauliRow> destabilizers, std::vector<PauliRow> stabilizers) {
    const std::size_t n = stabilizers.size();
    const bool full = !destabilizers.empty();
    if (full && destabilizers.size() != n) {
        throw DimensionMismatch("destabilizer and stabilizer counts differ");
    }
    Tableau t(n, d, full);
    t.rows_.clear();
    for (auto *block : {&destabilizers, &stabilizers}) {
        for (auto &row : *block) {
            if (row.d != d || row.num_qudits() != n) {
                throw DimensionMismatch("row shape does not match the tableau");
            }
            t.rows_.push_back(std::move(row));
        }
    }
    return t;
}

const PauliRow &Tableau::destabilizer(std::size_t i) const {
    if (!full_) {
        throw NotFullTableau("tableau does not track destabilizers");
    }
    return rows_[i];
}

PauliRow &Tableau::destabilizer(std::size_t i) {
    if (!full_) {
        throw NotFullTableau("tableau does not track destabilizers");
    }
    return rows_[i];
}

void Tableau::check_qudit(std::size_t q) const {
    if (q >= n_) {
        throw IndexOutOfRange("qudit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qudits");
    }
}

void Tableau::apply(const Gate &g) {
    check_qudit(g.q[0]);
    if (g.arity() == 2) {
        check_qudit(g.q[1]);
        if (g.q[0] == g.q[1]) {
            throw ControlEqualsTarget("two-qudit gate " + g.name() + " acts twice on qudit " + std::to_string(g.q[0]));
        }
    }
    if (g.kind == GateKind::I) {
        return;
    }
    for (auto &row : rows_) {
        apply_gate_to_row(row, g);
    }
}

void Tableau::apply_weyl(uint32_t a, uint32_t b, std::size_t q) {
    check_qudit(q);
    a %= d_;
    b %= d_;
    if (a == 0 && b == 0) {
        return;
    }
    const uint32_t two_d = 2 * d_;
    for (auto &row : rows_) {
        row.r = (row.r + weyl_phase_shift(a, b, row.x[q], row.z[q], d_)) % two_d;
    }
}

void Tableau::shift_phases(std::span<const uint32_t> delta) {
    if (delta.size() != rows_.size()) {
        throw DimensionMismatch("phase shift length differs from row count");
    }
    const uint32_t two_d = 2 * d_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        rows_[i].r = static_cast<uint32_t>((uint64_t{rows_[i].r} + delta[i]) % two_d);
    }
}

PauliRow Tableau::deterministic_row(std::size_t q) const {
    check_qudit(q);
    PauliRow g = PauliRow::identity(n_, d_);
    for (std::size_t j = 0; j < n_; ++j) {
        uint32_t c = destabilizer(j).x[q];
        if (c != 0) {
            compose_into(g, row_power(stabilizer(j), c));
        }
    }
    return g;
}

MeasurementResult Tableau::measure(std::size_t q, Rng &rng, std::optional<uint32_t> forced) {
    check_qudit(q);
    if (!full_) {
        throw NotFullTableau("measurement needs destabilizer rows");
    }
    if (!is_prime(d_)) {
        throw CompositeDimension("in-place measurement needs prime d; use the Smith-normal-form sampler for d = " +
                                 std::to_string(d_));
    }

    MeasurementResult result;
    std::size_t p = n_;
    for (std::size_t j = 0; j < n_; ++j) {
        if (stabilizer(j).x[q] != 0) {
            p = j;
            break;
        }
    }

    if (p == n_) {
        PauliRow g = deterministic_row(q);
        if (g.r % 2 != 0) {
            throw InvalidTableau("deterministic measurement produced an odd phase");
        }
        result.outcome = (d_ - (g.r / 2) % d_) % d_;
        return result;
    }

    PauliRow pivot = row_power(stabilizer(p), mod_inverse(stabilizer(p).x[q], d_));
    const std::size_t pivot_row = stabilizer_offset() + p;
    rows_[pivot_row] = pivot;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        uint32_t xq = rows_[i].x[q];
        if (i != pivot_row && xq != 0) {
            compose_into(rows_[i], row_power(pivot, d_ - xq));
        }
    }

    uint32_t k = forced.has_value() ? *forced % d_ : static_cast<uint32_t>(rng.uniform(d_));
    rows_[p] = std::move(pivot);
    PauliRow m = PauliRow::single_z(n_, d_, q);
    m.r = (2 * d_ - 2 * k) % (2 * d_);
    rows_[pivot_row] = std::move(m);

    result.outcome = k;
    result.random = true;
    result.pivot = p;
    return result;
}

std::vector<uint32_t> Tableau::measure_all(Rng &rng) {
    std::vector<uint32_t> out(n_);
    for (std::size_t q = 0; q < n_; ++q) {
        out[q] = measure(q, rng).outcome;
    }
    return out;
}

std::vector<uint32_t> Tableau::measure_subset(std::span<const std::size_t> qudits, Rng &rng) {
    std::vector<uint32_t> out;
    out.reserve(qudits.size());
    for (std::size_t q : qudits) {
        out.push_back(measure(q, rng).outcome);
    }
    return out;
}

bool Tableau::is_valid(std::string *why) const {
    auto fail = [why](std::string msg) {
        if (why != nullptr) {
            *why = std::move(msg);
        }
        return false;
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto &row = rows_[i];
        if (row.d != d_ || row.num_qudits() != n_) {
            return fail("row " + std::to_string(i) + " has the wrong shape");
        }
        if (d_ % 2 == 1 && row.r % 2 != 0) {
            return fail("row " + std::to_string(i) + " has an odd phase in odd dimension");
        }
    }
    const std::size_t off = stabilizer_offset();
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (symplectic_product(stabilizer(i), stabilizer(j)) != 0) {
                return fail("stabilizers " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
            }
        }
    }
    if (!full_) {
        return true;
    }
    const uint32_t pairing = symplectic_product(rows_[0], rows_[off]);
    if (pairing == 0) {
        return fail("destabilizer 0 commutes with its stabilizer");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i < j && symplectic_product(rows_[i], rows_[j]) != 0) {
                return fail("destabilizers " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
            }
            uint32_t expected = i == j ? pairing : 0;
            if (symplectic_product(rows_[i], rows_[off + j]) != expected) {
                return fail("destabilizer " + std::to_string(i) + " and stabilizer " + std::to_string(j) +
                            " break the pairing");
            }
        }
    }
    return true;
}

void Tableau::check_valid() const {
    std::string why;
    if (!is_valid(&why)) {
        throw InvalidTableau(why);
    }
}

std::string Tableau::str() const {
    std::string out;
    char buf[32];
    auto label = [&](const char *prefix, std::size_t i) {
        std::snprintf(buf, sizeof(buf), "%s%zu", prefix, i);
        std::string s = buf;
        if (s.size() < 3) {
            s.resize(3, ' ');
        }
        return s;
    };
    auto cells = [&](const std::vector<uint32_t> &v) {
        std::string s;
        for (uint32_t e : v) {
            std::snprintf(buf, sizeof(buf), "%3u", e);
            s += buf;
        }
        return s;
    };

    out += "#  |";
    for (const char *block : {"x", "z"}) {
        for (std::size_t i = 0; i < n_; ++i) {
            std::snprintf(buf, sizeof(buf), "%3s", (block + std::to_string(i)).c_str());
            out += buf;
        }
        out += " |";
    }
    out += " tau\n";
    const std::string rule(8 * n_, '-');

    auto emit = [&](const char *prefix, std::size_t first) {
        out += rule + "\n";
        for (std::size_t i = 0; i < n_; ++i) {
            const PauliRow &row = rows_[first + i];
            out += label(prefix, i) + "|" + cells(row.x) + " |" + cells(row.z) + " | " + std::to_string(row.r) + "\n";
        }
    };
    if (full_) {
        emit("d", 0);
    }
    emit("s", stabilizer_offset());
    return out;
}

std::string Tableau::serialize() const {
    std::ostringstream out;
    out << "QQT 1\n" << n_ << " " << d_ << " " << (full_ ? 1 : 0) << "\n";
    for (const auto &row : rows_) {
        for (uint32_t v : row.x) {
            out << v << " ";
        }
        for (uint32_t v : row.z) {
            out << v << " ";
        }
        out << row.r << "\n";
    }
    return out.str();
}

Tableau Tableau::deserialize(const std::string &text) {
    std::istringstream in(text);
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "QQT" || version != 1) {
        throw InvalidTableau("missing 'QQT 1' header");
    }
    std::size_t n = 0;
    uint32_t d = 0;
    int full = 0;
    if (!(in >> n >> d >> full) || (full != 0 && full != 1)) {
        throw InvalidTableau("bad shape line");
    }
    Tableau t(n, d, full == 1);
    for (auto &row : t.rows_) {
        for (auto *block : {&row.x, &row.z}) {
            for (auto &v : *block) {
                if (!(in >> v) || v >= d) {
                    throw InvalidTableau("bad exponent entry");
                }
            }
        }
        if (!(in >> row.r) || row.r >= 2 * d) {
            throw InvalidTableau("bad phase entry");
        }
    }
    std::string extra;
    if (in >> extra) {
        throw InvalidTableau("trailing data after the last row");
    }
    return t;
}

void AffineSampler::sample_into(Rng &rng, uint32_t *out) const {
    const std::size_t n = v0.size();
    std::copy(v0.begin(), v0.end(), out);
    for (const auto &row : basis) {
        uint32_t c = static_cast<uint32_t>(rng.uniform(d));
        if (c == 0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = (out[i] + c * row[i]) % d;
        }
    }
}

std::vector<std::vector<uint32_t>> AffineSampler::orbit() const {
    std::vector<std::vector<uint32_t>> points;
    std::vector<uint32_t> coeff(basis.size(), 0);
    while (true) {
        std::vector<uint32_t> v = v0;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                v[i] = (v[i] + coeff[k] * basis[k][i]) % d;
            }
        }
        points.push_back(std::move(v));
        std::size_t k = 0;
        while (k < coeff.size() && ++coeff[k] == d) {
            coeff[k++] = 0;
        }
        if (k == coeff.size()) {
            break;
        }
    }
    return points;
}

AffineSampler build_affine_sampler(const Tableau &t, Rng &rng) {
    if (!is_prime(t.dim())) {
        throw CompositeDimension("affine sampling needs prime d");
    }
    AffineSampler s;
    s.d = t.dim();
    ResidueRows xs;
    for (std::size_t j = 0; j < t.num_qudits(); ++j) {
        xs.push_back(t.stabilizer(j).x);
    }
    s.basis = rref_mod_p(xs, s.d).rows;
    Tableau copy = t;
    s.v0 = copy.measure_all(rng);
    return s;
}

std::vector<std::vector<uint32_t>> sample_shots(const AffineSampler &s, std::size_t shots, Rng &rng) {
    std::vector<std::vector<uint32_t>> out(shots, std::vector<uint32_t>(s.num_qudits()));
    for (auto &shot : out) {
        s.sample_into(rng, shot.data());
    }
    return out;
}

DenseState to_statevector(const Tableau &t) {
    const std::size_t n = t.num_qudits();
    const uint32_t d = t.dim();
    const std::size_t dim = checked_hilbert_dim(n, d);
    if (t.full()) {
        t.check_valid();
    }

    // Project a fixed generic vector onto the joint +1 eigenspace.
    Rng rng(0x7ab1eau);
    std::vector<Complex> amps(dim);
    for (auto &a : amps) {
        a = Complex(rng.uniform01() + 0.5, rng.uniform01() - 0.5);
    }
    DenseState state = DenseState::from_amplitudes(n, d, std::move(amps), false);
    for (std::size_t j = 0; j < n; ++j) {
        const PauliRow &s = t.stabilizer(j);
        DenseState acc = state;
        DenseState cur = state;
        for (uint32_t m = 1; m < d; ++m) {
            cur.apply_row(s);
            acc.add(cur);
        }
        acc.scale(1.0 / d);
        state = std::move(acc);
    }
    if (state.norm() < 1e-6) {
        throw InvalidTableau("stabilizers have no common +1 eigenvector");
    }
    state.normalize();
    state.canonicalize_phase();
    return state;
}

}  // namespace qtab
