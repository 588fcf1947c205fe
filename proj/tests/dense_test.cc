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

#include "qtab/dense.h"

#include "gtest/gtest.h"
#include "qtab/errors.h"
#include "test_util.h"

using namespace qtab;

TEST(dense, single_qudit_gates_are_unitary) {
    for (uint32_t d : {2u, 3u, 4u, 6u}) {
        for (const Gate &g : test_util::every_gate(1, d)) {
            ComplexMatrix u = single_qudit_matrix(g, d);
            ASSERT_LT((u * u.adjoint()).max_abs_diff(ComplexMatrix::identity(d)), 1e-12) << g.name();
            ComplexMatrix inv = single_qudit_matrix(g.inverse(), d);
            ASSERT_LT((u * inv).max_abs_diff(ComplexMatrix::identity(d)), 1e-12) << g.name();
        }
    }
}

TEST(dense, hadamard_and_phase) {
    ComplexMatrix h = single_qudit_matrix(Gate::single(GateKind::H, 0), 2);
    const double r = 1 / std::sqrt(2.0);
    ASSERT_NEAR(std::abs(h(1, 1) + r), 0, 1e-12);
    ASSERT_NEAR(std::abs(h(0, 1) - r), 0, 1e-12);
    ComplexMatrix s = single_qudit_matrix(Gate::single(GateKind::S, 0), 2);
    ASSERT_NEAR(std::abs(s(1, 1) - Complex(0, 1)), 0, 1e-12);
    ComplexMatrix s3 = single_qudit_matrix(Gate::single(GateKind::S, 0), 3);
    // Odd d: diag omega^{j(j-1)/2} = (1, 1, omega).
    ASSERT_NEAR(std::abs(s3(1, 1) - Complex(1)), 0, 1e-12);
    ASSERT_NEAR(std::abs(s3(2, 2) - std::polar(1.0, 2 * M_PI / 3)), 0, 1e-12);
}

TEST(dense, two_qudit_gates) {
    const uint32_t d = 3;
    DenseState psi(2, d);
    psi.apply(Gate::single(GateKind::X, 0));
    psi.apply(Gate::single(GateKind::X, 0));
    psi.apply(Gate::pair(GateKind::CNOT, 0, 1));
    // |c=2, t=2>: index 2 + 3 * 2.
    ASSERT_NEAR(std::abs(psi[8]), 1.0, 1e-12);
    psi.apply(Gate::pair(GateKind::SWAP, 0, 1));
    ASSERT_NEAR(std::abs(psi[8]), 1.0, 1e-12);
    psi.apply(Gate::pair(GateKind::CZ, 0, 1));
    ASSERT_NEAR(std::abs(psi[8] - std::polar(1.0, 2 * M_PI * 4 / 3)), 0, 1e-12);

    ComplexMatrix u = gate_matrix(Gate::pair(GateKind::CNOT, 1, 0, true), 2, d);
    ASSERT_LT((u * u.adjoint()).max_abs_diff(ComplexMatrix::identity(9)), 1e-12);
}

TEST(dense, apply_matches_gate_matrix) {
    auto rng = test_util::independent_test_rng(50);
    for (uint32_t d : {2u, 3u, 4u}) {
        Circuit c = random_clifford_circuit(3, d, 15, rng);
        DenseState psi = dense_run(c);
        ComplexMatrix u = circuit_unitary(c);
        for (std::size_t i = 0; i < psi.size(); ++i) {
            ASSERT_NEAR(std::abs(psi[i] - u(i, 0)), 0, 1e-10);
        }
    }
}

TEST(dense, state_helpers) {
    DenseState a = DenseState::from_amplitudes(1, 2, {Complex(0, 2), Complex(0, 0)});
    ASSERT_NEAR(a.norm(), 1.0, 1e-12);
    a.canonicalize_phase();
    ASSERT_NEAR(std::abs(a[0] - Complex(1)), 0, 1e-12);
    DenseState b(1, 2);
    b.apply(Gate::single(GateKind::X, 0));
    b.add(a);
    b.normalize();
    ASSERT_NEAR(std::abs(b.inner(a)), 1 / std::sqrt(2.0), 1e-12);
    auto p = b.probabilities();
    ASSERT_NEAR(p[0], 0.5, 1e-12);
    ASSERT_THROW(DenseState::from_amplitudes(2, 2, {Complex(1)}), DimensionMismatch);
}

TEST(dense, density_matrix_channels) {
    const uint32_t d = 3;
    DenseState plus(1, d);
    plus.apply(Gate::single(GateKind::H, 0));
    const double p = 0.3;
    DensityMatrix rho = DensityMatrix::from_state(plus);
    rho.apply_channel(NoiseModel::dephasing(p, d), 0);
    ASSERT_TRUE(rho.is_physical());
    ASSERT_NEAR(std::abs(rho.trace() - Complex(1)), 0, 1e-12);
    // Off-diagonal terms shrink by 1 - p d / (d - 1).
    ASSERT_NEAR(std::abs(rho.matrix()(0, 1)), (1 - p * d / (d - 1)) / d, 1e-12);

    DensityMatrix zero(1, d);
    zero.apply_channel(NoiseModel::depolarizing(p, d), 0);
    DenseState z(1, d);
    ASSERT_NEAR(dense_fidelity(zero, z), 1 - p * d / (d + 1), 1e-12);
}

TEST(dense, born_distribution_marginals) {
    Circuit c(3, 3);
    c.gate(GateKind::H, 0).gate(GateKind::CNOT, 0, 2);
    DenseState psi = dense_run(c);
    std::vector<std::size_t> q{2, 1};
    auto probs = born_distribution(psi, q);
    ASSERT_EQ(probs.size(), 9u);
    for (uint32_t k = 0; k < 3; ++k) {
        ASSERT_NEAR(probs[k], 1.0 / 3, 1e-12);
    }
    auto mixed = born_distribution(DensityMatrix::from_state(psi), q);
    for (std::size_t i = 0; i < 9; ++i) {
        ASSERT_NEAR(mixed[i], probs[i], 1e-12);
    }
}

TEST(dense, size_guard) {
    ASSERT_THROW(DensityMatrix(12, 6), TooLarge);
}
