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

#include "qtab/composite.h"

#include <algorithm>

#include "qtab/errors.h"

namespace qtab {

namespace {

ResidueRows to_residues(const IntMatrix &m, uint32_t d) {
    ResidueRows out(m.rows(), std::vector<uint32_t>(m.cols()));
    const BigInt dd = d;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            BigInt v = m(r, c) % dd;
            if (v < 0) {
                v += dd;
            }
            out[r][c] = static_cast<uint32_t>(v);
        }
    }
    return out;
}

uint32_t half_negated_phase(uint32_t r, uint32_t d) {
    if (r % 2 != 0) {
        throw InconsistentSystem("diagonal stabilizer element has an odd phase");
    }
    return (d - (r / 2) % d) % d;
}

}  // namespace

SnfSampler SnfSampler::build(const Tableau &t) {
    SnfSampler s;
    s.d_ = t.dim();
    s.n_ = t.num_qudits();
    const uint32_t d = s.d_;
    const std::size_t n = s.n_;

    IntMatrix xt(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            xt(i, j) = t.stabilizer(j).x[i];
        }
    }
    s.kernel_ = kernel_mod_d(xt, d);

    for (const auto &u : s.kernel_) {
        PauliRow diag = PauliRow::identity(n, d);
        for (std::size_t j = 0; j < n; ++j) {
            if (u[j] != 0) {
                compose_into(diag, row_power(t.stabilizer(j), u[j]));
            }
        }
        if (!diag.is_diagonal()) {
            throw InvalidTableau("kernel combination of stabilizers is not diagonal");
        }
        s.b_.push_back(diag.z);
        s.c_.push_back(half_negated_phase(diag.r, d));
    }

    if (!s.b_.empty()) {
        SmithDecomposition snf = smith_normal_form(IntMatrix::from_residues(s.b_, n));
        ResidueRows dmod = to_residues(snf.D, d);
        for (std::size_t i = 0; i < std::min(snf.D.rows(), snf.D.cols()); ++i) {
            s.diag_.push_back(dmod[i][i]);
        }
        s.u_ = to_residues(snf.U, d);
        s.v_ = to_residues(snf.V, d);
    } else {
        s.v_.assign(n, std::vector<uint32_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            s.v_[i][i] = 1;
        }
    }
    s.solve();
    return s;
}

void SnfSampler::solve() {
    const std::size_t r = b_.size();
    std::vector<uint32_t> uc(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        uint64_t acc = 0;
        for (std::size_t k = 0; k < r; ++k) {
            acc = (acc + uint64_t{u_[i][k]} * c_[k]) % d_;
        }
        uc[i] = static_cast<uint32_t>(acc);
    }
    coords_.assign(n_, CongruenceSolution{0, 1, d_});
    for (std::size_t i = 0; i < r; ++i) {
        if (i >= n_) {
            if (uc[i] != 0) {
                throw InconsistentSystem("zero row of the diagonal system has a nonzero right-hand side");
            }
            continue;
        }
        try {
            coords_[i] = solve_congruence(diag_[i], uc[i], d_);
        } catch (const Unsolvable &e) {
            throw InconsistentSystem(e.what());
        }
    }
}

void SnfSampler::sample_into(Rng &rng, uint32_t *out) const {
    std::vector<uint32_t> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const auto &c = coords_[i];
        uint64_t pick = c.count > 1 ? rng.uniform(c.count) : 0;
        y[i] = static_cast<uint32_t>((c.particular + pick * c.step) % d_);
    }
    for (std::size_t row = 0; row < n_; ++row) {
        uint64_t acc = 0;
        for (std::size_t k = 0; k < n_; ++k) {
            acc += uint64_t{v_[row][k]} * y[k];
        }
        out[row] = static_cast<uint32_t>(acc % d_);
    }
}

std::vector<std::vector<uint32_t>> SnfSampler::sample(std::size_t shots, Rng &rng) const {
    std::vector<std::vector<uint32_t>> out(shots, std::vector<uint32_t>(n_));
    for (auto &shot : out) {
        sample_into(rng, shot.data());
    }
    return out;
}

bool SnfSampler::satisfies(std::span<const uint32_t> m) const {
    if (m.size() != n_) {
        return false;
    }
    for (std::size_t l = 0; l < b_.size(); ++l) {
        uint64_t acc = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            acc += uint64_t{b_[l][i]} * m[i];
        }
        if (acc % d_ != c_[l]) {
            return false;
        }
    }
    return true;
}

SnfSampler SnfSampler::with_phase_shift(std::span<const uint32_t> stabilizer_delta) const {
    if (stabilizer_delta.size() != n_) {
        throw DimensionMismatch("phase shift needs one entry per stabilizer");
    }
    SnfSampler out = *this;
    const uint64_t two_d = 2 * uint64_t{d_};
    for (std::size_t l = 0; l < kernel_.size(); ++l) {
        uint64_t shift = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            shift = (shift + uint64_t{kernel_[l][j]} * stabilizer_delta[j]) % two_d;
        }
        if (shift % 2 != 0) {
            throw InconsistentSystem("odd phase shift on a diagonal stabilizer element");
        }
        out.c_[l] = static_cast<uint32_t>((c_[l] + d_ - (shift / 2) % d_) % d_);
    }
    out.solve();
    return out;
}

std::map<std::vector<uint32_t>, double> SnfSampler::distribution() const {
    double total = 1;
    for (const auto &c : coords_) {
        total *= c.count;
    }
    if (total > 1e6) {
        throw TooLarge("solution set too large to enumerate");
    }
    std::map<std::vector<uint32_t>, double> out;
    std::vector<uint32_t> pick(n_, 0);
    std::vector<uint32_t> y(n_), m(n_);
    while (true) {
        for (std::size_t i = 0; i < n_; ++i) {
            y[i] = static_cast<uint32_t>((coords_[i].particular + uint64_t{pick[i]} * coords_[i].step) % d_);
        }
        for (std::size_t row = 0; row < n_; ++row) {
            uint64_t acc = 0;
            for (std::size_t k = 0; k < n_; ++k) {
                acc += uint64_t{v_[row][k]} * y[k];
            }
            m[row] = static_cast<uint32_t>(acc % d_);
        }
        out[m] += 1.0 / total;
        std::size_t i = 0;
        while (i < n_ && ++pick[i] == coords_[i].count) {
            pick[i++] = 0;
        }
        if (i == n_) {
            break;
        }
    }
    return out;
}

}  // namespace qtab
