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

#include "qtab/weyl.h"

#include <algorithm>
#include <sstream>

#include "qtab/errors.h"
#include "qtab/modular.h"

namespace qtab {

namespace {

void check_compatible(const PauliRow &a, const PauliRow &b) {
    if (a.d != b.d || a.x.size() != b.x.size()) {
        throw DimensionMismatch("rows differ in qudit count or dimension");
    }
}

}  // namespace

PauliRow::PauliRow(uint32_t dim, std::vector<uint32_t> xs, std::vector<uint32_t> zs, uint32_t phase)
    : d(dim), x(std::move(xs)), z(std::move(zs)), r(phase % (2 * dim)) {
    if (x.size() != z.size()) {
        throw DimensionMismatch("x and z blocks differ in length");
    }
    for (auto &v : x) {
        v %= d;
    }
    for (auto &v : z) {
        v %= d;
    }
}

PauliRow PauliRow::single_x(std::size_t n, uint32_t dim, std::size_t q) {
    PauliRow row(n, dim);
    row.x.at(q) = 1;
    return row;
}

PauliRow PauliRow::single_z(std::size_t n, uint32_t dim, std::size_t q) {
    PauliRow row(n, dim);
    row.z.at(q) = 1;
    return row;
}

bool PauliRow::is_identity() const {
    return r == 0 && is_diagonal() && std::all_of(z.begin(), z.end(), [](uint32_t v) { return v == 0; });
}

bool PauliRow::is_diagonal() const {
    return std::all_of(x.begin(), x.end(), [](uint32_t v) { return v == 0; });
}

void compose_into(PauliRow &a, const PauliRow &b) {
    check_compatible(a, b);
    const uint64_t d = a.d;
    uint64_t cross = 0;
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        cross = (cross + uint64_t{a.z[i]} * b.x[i]) % d;
        a.x[i] = static_cast<uint32_t>((a.x[i] + b.x[i]) % d);
        a.z[i] = static_cast<uint32_t>((a.z[i] + b.z[i]) % d);
    }
    a.r = static_cast<uint32_t>((a.r + b.r + 2 * cross) % (2 * d));
}

PauliRow compose(const PauliRow &a, const PauliRow &b) {
    PauliRow out = a;
    compose_into(out, b);
    return out;
}

PauliRow row_power(const PauliRow &g, uint64_t k) {
    // g^{2d} is the identity, so only k mod 2d matters.
    k %= 2 * uint64_t{g.d};
    PauliRow result = PauliRow::identity(g.num_qudits(), g.d);
    PauliRow base = g;
    while (k > 0) {
        if (k & 1) {
            compose_into(result, base);
        }
        k >>= 1;
        if (k > 0) {
            base = compose(base, base);
        }
    }
    return result;
}

uint32_t symplectic_product(const PauliRow &a, const PauliRow &b) {
    check_compatible(a, b);
    const uint64_t d = a.d;
    uint64_t acc = 0;
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        acc = (acc + uint64_t{a.x[i]} * b.z[i] + (d - b.x[i]) % d * a.z[i]) % d;
    }
    return static_cast<uint32_t>(acc);
}

ComplexMatrix dense_row(const PauliRow &g) {
    const std::size_t n = g.num_qudits();
    const uint32_t d = g.d;
    const std::size_t dim = checked_hilbert_dim(n, d);
    ComplexMatrix m(dim);
    std::vector<uint32_t> digits(n, 0);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t rest = col;
        for (std::size_t q = 0; q < n; ++q) {
            digits[q] = static_cast<uint32_t>(rest % d);
            rest /= d;
        }
        // X^x Z^z |j> = omega^{z.j} |j + x>
        int64_t tau_exp = g.r;
        std::size_t row = 0;
        std::size_t place = 1;
        for (std::size_t q = 0; q < n; ++q) {
            tau_exp += 2 * static_cast<int64_t>(g.z[q]) * digits[q];
            row += ((digits[q] + g.x[q]) % d) * place;
            place *= d;
        }
        m(row, col) = tau_power(tau_exp, d);
    }
    return m;
}

ComplexMatrix weyl_matrix(uint32_t a, uint32_t b, uint32_t d) {
    PauliRow row(d, {a}, {b}, 0);
    ComplexMatrix xz = dense_row(row);
    return xz * tau_power(-static_cast<int64_t>(a % d) * (b % d), d);
}

std::string to_operator_string(const PauliRow &g) {
    std::ostringstream out;
    out << "τ^" << g.r;
    for (std::size_t q = 0; q < g.num_qudits(); ++q) {
        out << (q == 0 ? " " : " ⊗ ") << "X^" << g.x[q] << "Z^" << g.z[q];
    }
    return out.str();
}

}  // namespace qtab
