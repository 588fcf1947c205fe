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

#ifndef QTAB_WEYL_H
#define QTAB_WEYL_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qtab/complex_matrix.h"

namespace qtab {

/// One Weyl generator tau^r * X^x Z^z (tensor over qudits), stored as exponents.
///
/// x and z are residues mod d; r is a residue mod 2d. Every tableau row is a PauliRow.
struct PauliRow {
    uint32_t d = 2;
    std::vector<uint32_t> x;
    std::vector<uint32_t> z;
    uint32_t r = 0;

    PauliRow() = default;
    PauliRow(std::size_t n, uint32_t dim) : d(dim), x(n, 0), z(n, 0), r(0) {
    }
    /// Reduces every entry into range.
    PauliRow(uint32_t dim, std::vector<uint32_t> xs, std::vector<uint32_t> zs, uint32_t phase);

    static PauliRow identity(std::size_t n, uint32_t dim) {
        return PauliRow(n, dim);
    }
    static PauliRow single_x(std::size_t n, uint32_t dim, std::size_t q);
    static PauliRow single_z(std::size_t n, uint32_t dim, std::size_t q);

    std::size_t num_qudits() const {
        return x.size();
    }
    bool is_identity() const;
    /// True when the X part vanishes (the operator is diagonal in the computational basis).
    bool is_diagonal() const;

    bool operator==(const PauliRow &) const = default;
};

/// a * b. x, z add mod d; r = r_a + r_b + 2 (z_a . x_b) mod 2d.
PauliRow compose(const PauliRow &a, const PauliRow &b);

/// a <- a * b without allocating.
void compose_into(PauliRow &a, const PauliRow &b);

/// g^k; k = 0 gives the identity row.
PauliRow row_power(const PauliRow &g, uint64_t k);

/// x_a . z_b - x_b . z_a mod d. Zero iff the two operators commute.
uint32_t symplectic_product(const PauliRow &a, const PauliRow &b);

/// tau^r * (X^{x_0} Z^{z_0}) (x) ... as a d^n x d^n matrix. Qudit 0 is the least significant
/// digit of the basis index.
ComplexMatrix dense_row(const PauliRow &g);

/// Single-qudit Weyl operator W(a, b) = tau^{-ab} X^a Z^b.
ComplexMatrix weyl_matrix(uint32_t a, uint32_t b, uint32_t d);

/// Operator form, e.g. "τ^2 X^1Z^0 ⊗ X^0Z^1".
std::string to_operator_string(const PauliRow &g);

}  // namespace qtab

#endif
