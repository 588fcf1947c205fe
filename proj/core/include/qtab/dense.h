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


#ifndef QTAB_DENSE_H
#define QTAB_DENSE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qtab/complex_matrix.h"
#include "qtab/gate.h"
#include "qtab/weyl.h"

namespace qtab {

class Circuit;
class NoiseModel;

/// d x d matrix of a single-qudit gate (I, X, Z, Y, W, H, S and their daggers).
ComplexMatrix single_qudit_matrix(const Gate &g, uint32_t d);

/// Full d^n x d^n unitary of a gate. Qudit 0 is the least significant basis digit.
ComplexMatrix gate_matrix(const Gate &g, std::size_t n, uint32_t d);

/// Statevector on n qudits, amplitude index = sum_i j_i d^i.
class DenseState {
   public:
    /// The basis state |0...0>.
    DenseState(std::size_t n, uint32_t d);
    static DenseState from_amplitudes(std::size_t n, uint32_t d, std::vector<Complex> amps, bool normalize = true);

    std::size_t num_qudits() const {
        return n_;
    }
    uint32_t dim() const {
        return d_;
    }
    std::size_t size() const {
        return amps_.size();
    }
    const std::vector<Complex> &amplitudes() const {
        return amps_;
    }
    Complex operator[](std::size_t i) const {
        return amps_[i];
    }

    void apply(const Gate &g);
    /// Applies a d x d matrix to qudit q.
    void apply_local(const ComplexMatrix &u, std::size_t q);
    /// Multiplies by the operator tau^r X^x Z^z of a tableau row.
    void apply_row(const PauliRow &row);

    void add(const DenseState &other);
    void scale(Complex s);
    double norm() const;
    void normalize();
    /// Rotates the global phase so the first amplitude above 1e-9 in modulus is real and positive.
    void canonicalize_phase();

    /// <this|other>.
    Complex inner(const DenseState &other) const;
    std::vector<double> probabilities() const;

   private:
    std::size_t n_;
    uint32_t d_;
    std::vector<Complex> amps_;
};

class DensityMatrix {
   public:
    /// The pure state |0...0><0...0|.
    DensityMatrix(std::size_t n, uint32_t d);
    static DensityMatrix from_state(const DenseState &psi);

    std::size_t num_qudits() const {
        return n_;
    }
    uint32_t dim() const {
        return d_;
    }
    const ComplexMatrix &matrix() const {
        return rho_;
    }

    void apply(const Gate &g);
    /// rho <- u rho u^dagger with u acting on qudit q.
    void apply_local(const ComplexMatrix &u, std::size_t q);
    /// rho <- sum_{a,b} q_{a,b} W(a,b) rho W(a,b)^dagger on qudit q.
    void apply_channel(const NoiseModel &model, std::size_t q);

    Complex trace() const {
        return rho_.trace();
    }
    /// Hermitian, unit trace and positive on computational-basis diagonal within tol.
    bool is_physical(double tol = 1e-10) const;

   private:
    std::size_t n_;
    uint32_t d_;
    ComplexMatrix rho_;
};

/// Marginal distribution of the listed qudits; outcome index = sum_k m_k d^k over the list order.
std::vector<double> born_distribution(const DenseState &psi, std::span<const std::size_t> qudits);
std::vector<double> born_distribution(const DensityMatrix &rho, std::span<const std::size_t> qudits);

/// <psi|rho|psi>, clipped into [0, 1].
double dense_fidelity(const DensityMatrix &rho, const DenseState &psi);

/// Runs the gates of a circuit on |0...0>. Noise and measurement ops are rejected.
DenseState dense_run(const Circuit &c);
/// Runs gates and noise channels exactly on |0...0><0...0|. Measurement ops are skipped.
DensityMatrix dense_run_mixed(const Circuit &c);

/// Unitary of the gate sequence c (noise and measurement rejected).
ComplexMatrix circuit_unitary(const Circuit &c);

}  // namespace qtab

#endif
