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

#include "qtab/complex_matrix.h"

#include <atomic>
#include <cmath>
#include <numbers>

#include "qtab/errors.h"

namespace qtab {

namespace {
std::atomic<std::size_t> g_dense_cutoff{std::size_t{1} << 20};
}

std::size_t dense_cutoff() {
    return g_dense_cutoff.load();
}

void set_dense_cutoff(std::size_t amplitudes) {
    g_dense_cutoff.store(amplitudes);
}

std::size_t checked_hilbert_dim(std::size_t n, uint32_t d) {
    std::size_t dim = 1;
    const std::size_t cutoff = dense_cutoff();
    for (std::size_t i = 0; i < n; ++i) {
        dim *= d;
        if (dim > cutoff) {
            throw TooLarge("dense representation of " + std::to_string(n) + " qudits of dimension " +
                           std::to_string(d) + " exceeds the cutoff of " + std::to_string(cutoff) + " amplitudes");
        }
    }
    return dim;
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (dim_ != rhs.dim_) {
        throw DimensionMismatch("matrix product shape mismatch");
    }
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    ComplexMatrix out = *this;
    for (auto &v : out.data_) {
        v *= s;
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix &rhs) const {
    ComplexMatrix out(dim_ * rhs.dim_);
    for (std::size_t r1 = 0; r1 < dim_; ++r1) {
        for (std::size_t c1 = 0; c1 < dim_; ++c1) {
            Complex a = (*this)(r1, c1);
            for (std::size_t r2 = 0; r2 < rhs.dim_; ++r2) {
                for (std::size_t c2 = 0; c2 < rhs.dim_; ++c2) {
                    out(r1 * rhs.dim_ + r2, c1 * rhs.dim_ + c2) = a * rhs(r2, c2);
                }
            }
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &rhs) const {
    if (dim_ != rhs.dim_) {
        throw DimensionMismatch("matrix comparison shape mismatch");
    }
    double worst = 0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - rhs.data_[i]));
    }
    return worst;
}

bool ComplexMatrix::is_diagonal(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (r != c && std::abs((*this)(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

Complex tau_power(int64_t k, uint32_t d) {
    const int64_t two_d = 2 * static_cast<int64_t>(d);
    const int64_t base = (static_cast<int64_t>(d) * d + 1) % two_d;
    int64_t kk = k % two_d;
    if (kk < 0) {
        kk += two_d;
    }
    const int64_t e = base * kk % two_d;
    return std::polar(1.0, std::numbers::pi * static_cast<double>(e) / static_cast<double>(d));
}

}  // namespace qtab
