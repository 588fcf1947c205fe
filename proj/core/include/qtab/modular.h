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

#ifndef QTAB_MODULAR_H
#define QTAB_MODULAR_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtab {

/// Exact integer used for Smith normal form intermediates.
using BigInt = boost::multiprecision::cpp_int;

/// Largest supported qudit dimension. Residues mod d and phases mod 2d fit in 16 bits.
constexpr uint32_t kMaxDimension = 1u << 15;

/// Reduces v into [0, m).
constexpr uint32_t reduce_mod(int64_t v, uint32_t m) {
    int64_t r = v % static_cast<int64_t>(m);
    return static_cast<uint32_t>(r < 0 ? r + m : r);
}

/// Throws InvalidDimension unless 2 <= d <= kMaxDimension.
void check_dimension(uint32_t d);

bool is_prime(uint32_t d);

/// Returns m with a*m = 1 (mod d). Throws NotInvertible when gcd(a, d) != 1.
uint32_t mod_inverse(uint32_t a, uint32_t d);

/// Dense matrix of residues mod `modulus`, row-major.
using ResidueRows = std::vector<std::vector<uint32_t>>;

struct RrefResult {
    /// Nonzero rows of the reduced row echelon form.
    ResidueRows rows;
    std::size_t rank = 0;
    /// Pivot column of each returned row.
    std::vector<std::size_t> pivots;
};

/// Canonical reduced row echelon form over the field Z_p. Zero rows are dropped.
/// Pivot rows are taken top-to-bottom in the order they are found.
RrefResult rref_mod_p(const ResidueRows &m, uint32_t p);

/// Exact integer matrix.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_residues(const ResidueRows &rows, std::size_t cols);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    BigInt &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const BigInt &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix &rhs) const;
    bool operator==(const IntMatrix &rhs) const = default;

    /// Determinant by fraction-free (Bareiss) elimination. Square matrices only.
    BigInt determinant() const;

    std::string to_string() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithDecomposition {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;
};

SmithDecomposition smith_normal_form(const IntMatrix &a);

/// Generators of {u : A u = 0 (mod d)}, entries reduced into [0, d). Zero generators are
/// omitted, so the result is empty when the kernel is trivial.
ResidueRows kernel_mod_d(const IntMatrix &a, uint32_t d);

/// All solutions of s*y = c (mod d): particular + j*step for j in [0, count).
struct CongruenceSolution {
    uint32_t particular = 0;
    uint32_t step = 1;
    uint32_t count = 1;

    bool operator==(const CongruenceSolution &) const = default;
};

/// Throws Unsolvable when gcd(s, d) does not divide c. s = 0 (mod d) with c = 0 gives the
/// free variable (particular 0, step 1, count d).
CongruenceSolution solve_congruence(const BigInt &s, const BigInt &c, uint32_t d);

}  // namespace qtab

#endif
