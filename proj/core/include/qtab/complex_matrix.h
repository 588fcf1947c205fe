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

#ifndef QTAB_COMPLEX_MATRIX_H
#define QTAB_COMPLEX_MATRIX_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qtab {

using Complex = std::complex<double>;

/// Largest Hilbert-space dimension (d^n) the dense routines accept. Defaults to 2^20.
std::size_t dense_cutoff();
void set_dense_cutoff(std::size_t amplitudes);

/// d^n, or throws TooLarge when it exceeds dense_cutoff().
std::size_t checked_hilbert_dim(std::size_t n, uint32_t d);

/// Square complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    }

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * dim_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }

    ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    ComplexMatrix operator*(Complex s) const;
    ComplexMatrix adjoint() const;
    /// Kronecker product; `this` is the more significant factor.
    ComplexMatrix kron(const ComplexMatrix &rhs) const;
    Complex trace() const;

    /// max |a_ij - b_ij|.
    double max_abs_diff(const ComplexMatrix &rhs) const;
    bool is_diagonal(double tol) const;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// tau^k with tau = exp(i pi (d^2 + 1) / d). The exponent is reduced mod 2d before the
/// single complex exponential is taken.
Complex tau_power(int64_t k, uint32_t d);

}  // namespace qtab

#endif
