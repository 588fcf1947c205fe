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

#include "gtest/gtest.h"
#include "qtab/dense.h"
#include "qtab/errors.h"
#include "test_util.h"

using namespace qtab;

namespace {

PauliRow row3(std::vector<uint32_t> x, std::vector<uint32_t> z, uint32_t r) {
    return PauliRow(3, std::move(x), std::move(z), r);
}

Tableau ghz_tableau() {
    Tableau t(3, 3);
    t.apply(Gate::single(GateKind::H, 0));
    t.apply(Gate::pair(GateKind::CNOT, 0, 1));
    t.apply(Gate::pair(GateKind::CNOT, 1, 2));
    return t;
}

/// A valid n = 3, d = 3 tableau used as the starting point of the reduction walkthrough.
Tableau reduction_start() {
    return Tableau::from_rows(3, {row3({0, 0, 0}, {0, 2, 0}, 2), row3({2, 0, 2}, {1, 0, 2}, 0), row3({0, 0, 1}, {0, 2, 1}, 4)},
                              {row3({1, 1, 1}, {0, 0, 0}, 0), row3({0, 0, 0}, {2, 1, 0}, 2), row3({0, 0, 0}, {2, 0, 1}, 0)});
}

}  // namespace

TEST(tableau, initial_state) {
    Tableau t(2, 5);
    ASSERT_EQ(t.destabilizer(0), PauliRow::single_x(2, 5, 0));
    ASSERT_EQ(t.destabilizer(1), PauliRow::single_x(2, 5, 1));
    ASSERT_EQ(t.stabilizer(0), PauliRow::single_z(2, 5, 0));
    ASSERT_EQ(t.stabilizer(1), PauliRow::single_z(2, 5, 1));
    ASSERT_TRUE(t.is_valid());

    Tableau half(2, 5, false);
    ASSERT_EQ(half.rows().size(), 2u);
    ASSERT_THROW(half.destabilizer(0), NotFullTableau);
    ASSERT_EQ(half.stabilizer(1), PauliRow::single_z(2, 5, 1));
    ASSERT_THROW(Tableau(0, 3), InvalidDimension);
    ASSERT_THROW(Tableau(1, 1), InvalidDimension);
}

TEST(tableau, ghz_rows) {
    Tableau t = ghz_tableau();
    ASSERT_EQ(t.destabilizer(0), row3({0, 0, 0}, {1, 0, 0}, 0));
    ASSERT_EQ(t.destabilizer(1), row3({0, 1, 1}, {0, 0, 0}, 0));
    ASSERT_EQ(t.destabilizer(2), row3({0, 0, 1}, {0, 0, 0}, 0));
    ASSERT_EQ(t.stabilizer(0), row3({2, 2, 2}, {0, 0, 0}, 0));
    ASSERT_EQ(t.stabilizer(1), row3({0, 0, 0}, {2, 1, 0}, 0));
    ASSERT_EQ(t.stabilizer(2), row3({0, 0, 0}, {0, 2, 1}, 0));
}

TEST(tableau, str) {
    ASSERT_EQ(ghz_tableau().str(),
              "#  | x0 x1 x2 | z0 z1 z2 | tau\n"
              "------------------------\n"
              "d0 |  0  0  0 |  1  0  0 | 0\n"
              "d1 |  0  1  1 |  0  0  0 | 0\n"
              "d2 |  0  0  1 |  0  0  0 | 0\n"
              "------------------------\n"
              "s0 |  2  2  2 |  0  0  0 | 0\n"
              "s1 |  0  0  0 |  2  1  0 | 0\n"
              "s2 |  0  0  0 |  0  2  1 | 0\n");
}

TEST(tableau, gate_updates_match_dense_conjugation) {
    for (uint32_t d : {2u, 3u, 4u, 5u, 6u}) {
        for (const Gate &g : test_util::every_gate(2, d)) {
            ComplexMatrix u = gate_matrix(g, 2, d);
            Tableau t(2, d);
            for (std::size_t q = 0; q < 2; ++q) {
                // Start from a generic row so every term of the update is exercised.
                t.destabilizer(q) = PauliRow(d, {1, 2}, {static_cast<uint32_t>(q) + 1, 1}, 1 + static_cast<uint32_t>(q));
            }
            std::vector<PauliRow> before = t.rows();
            t.apply(g);
            for (std::size_t i = 0; i < before.size(); ++i) {
                ComplexMatrix expected = u * dense_row(before[i]) * u.adjoint();
                ASSERT_LT(dense_row(t.rows()[i]).max_abs_diff(expected), 1e-10) << g.name() << " d=" << d;
            }
        }
    }
}

TEST(tableau, gate_then_inverse_is_identity) {
    auto rng = test_util::independent_test_rng(10);
    for (uint32_t d : {2u, 3u, 4u, 7u}) {
        Tableau start = test_util::random_tableau(3, d, rng);
        for (const Gate &g : test_util::every_gate(3, d)) {
            Tableau t = start;
            t.apply(g);
            t.apply(g.inverse());
            ASSERT_EQ(t, start) << g.name();
        }
    }
}

TEST(tableau, random_circuits_stay_valid) {
    auto rng = test_util::independent_test_rng(11);
    for (uint32_t d : {2u, 3u, 4u, 5u, 6u, 9u}) {
        for (int trial = 0; trial < 10; ++trial) {
            Tableau t = test_util::random_tableau(4, d, rng);
            std::string why;
            ASSERT_TRUE(t.is_valid(&why)) << why;
        }
    }
}

TEST(tableau, apply_rejects_bad_targets) {
    Tableau t(2, 3);
    ASSERT_THROW(t.apply(Gate::single(GateKind::H, 2)), IndexOutOfRange);
    ASSERT_THROW(t.apply(Gate::pair(GateKind::CNOT, 1, 1)), ControlEqualsTarget);
}

TEST(tableau, apply_weyl_matches_gate) {
    auto rng = test_util::independent_test_rng(12);
    for (uint32_t d : {2u, 3u, 4u}) {
        Tableau start = test_util::random_tableau(2, d, rng);
        for (uint32_t a = 0; a < d; ++a) {
            for (uint32_t b = 0; b < d; ++b) {
                Tableau x = start;
                Tableau y = start;
                x.apply_weyl(a, b, 1);
                y.apply(Gate::weyl(a, b, 1));
                ASSERT_EQ(x, y);
            }
        }
    }
}

TEST(tableau, ghz_forced_measurement) {
    Tableau t = ghz_tableau();
    Rng rng(1);
    MeasurementResult m0 = t.measure(0, rng, 2u);
    ASSERT_TRUE(m0.random);
    ASSERT_EQ(m0.outcome, 2u);
    ASSERT_EQ(t.destabilizer(0), row3({1, 1, 1}, {0, 0, 0}, 0));
    ASSERT_EQ(t.stabilizer(0), row3({0, 0, 0}, {1, 0, 0}, 2));
    MeasurementResult m1 = t.measure(1, rng);
    MeasurementResult m2 = t.measure(2, rng);
    ASSERT_FALSE(m1.random);
    ASSERT_FALSE(m2.random);
    ASSERT_EQ(m1.outcome, 2u);
    ASSERT_EQ(m2.outcome, 2u);
    ASSERT_TRUE(t.is_valid());
}

TEST(tableau, measurement_outcomes_match_state) {
    auto rng = test_util::independent_test_rng(13);
    for (uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 20; ++trial) {
            Tableau t = test_util::random_tableau(3, d, rng);
            DenseState psi = to_statevector(t);
            std::vector<std::size_t> q{trial % 3u};
            auto probs = born_distribution(psi, q);
            MeasurementResult m = t.measure(q[0], rng);
            ASSERT_GT(probs[m.outcome], 1e-9);
            if (!m.random) {
                ASSERT_NEAR(probs[m.outcome], 1.0, 1e-9);
            } else {
                ASSERT_NEAR(probs[m.outcome], 1.0 / d, 1e-9);
            }
            ASSERT_TRUE(t.is_valid());
            // Measuring again is deterministic and repeats the outcome.
            MeasurementResult again = t.measure(q[0], rng);
            ASSERT_FALSE(again.random);
            ASSERT_EQ(again.outcome, m.outcome);
        }
    }
}

TEST(tableau, measure_rejects_composite) {
    Tableau t(2, 6);
    Rng rng(0);
    ASSERT_THROW(t.measure(0, rng), CompositeDimension);
}

TEST(tableau, reduction_walkthrough) {
    Tableau t = reduction_start();
    ASSERT_TRUE(t.is_valid());
    Rng rng(0);
    MeasurementResult m2 = t.measure(2, rng, 1u);
    ASSERT_TRUE(m2.random);
    ASSERT_EQ(m2.pivot, 0u);
    ASSERT_EQ(t, Tableau::from_rows(3,
                                    {row3({1, 1, 1}, {0, 0, 0}, 0), row3({0, 1, 0}, {1, 0, 2}, 0),
                                     row3({2, 2, 0}, {0, 2, 1}, 4)},
                                    {row3({0, 0, 0}, {0, 0, 1}, 4), row3({0, 0, 0}, {2, 1, 0}, 2),
                                     row3({0, 0, 0}, {2, 0, 1}, 0)}));

    Tableau r1 = reduce_after_measurement(t, 2, m2);
    auto row2 = [](std::vector<uint32_t> x, std::vector<uint32_t> z, uint32_t r) { return PauliRow(3, x, z, r); };
    ASSERT_EQ(r1, Tableau::from_rows(3, {row2({0, 1}, {1, 0}, 0), row2({2, 2}, {0, 2}, 4)},
                                     {row2({0, 0}, {2, 1}, 2), row2({0, 0}, {2, 0}, 2)}));

    MeasurementResult m1 = r1.measure(1, rng);
    ASSERT_FALSE(m1.random);
    ASSERT_EQ(m1.outcome, 0u);
    Tableau r2 = reduce_after_measurement(r1, 1, m1);
    ASSERT_EQ(r2, Tableau::from_rows(3, {PauliRow(3, {2}, {1}, 2)}, {PauliRow(3, {0}, {2}, 2)}));

    MeasurementResult last = r2.measure(0, rng);
    ASSERT_FALSE(last.random);
    ASSERT_EQ(last.outcome, 1u);
}

TEST(tableau, reduction_preserves_remaining_state) {
    auto rng = test_util::independent_test_rng(14);
    for (uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 30; ++trial) {
            Tableau t = test_util::random_tableau(3, d, rng);
            std::size_t q = rng.uniform(3);
            MeasurementResult m = t.measure(q, rng);
            Tableau reduced = reduce_after_measurement(t, q, m);
            ASSERT_EQ(reduced.num_qudits(), 2u);
            std::string why;
            ASSERT_TRUE(reduced.is_valid(&why)) << why;

            // The post-measurement state factorizes as |rest> (x) |m> on qudit q.
            DenseState full = to_statevector(t);
            DenseState rest = to_statevector(reduced);
            std::vector<Complex> amps(full.size());
            const std::size_t stride = static_cast<std::size_t>(std::pow(d, q));
            for (std::size_t i = 0; i < rest.size(); ++i) {
                amps[i % stride + stride * (m.outcome + d * (i / stride))] = rest[i];
            }
            DenseState expected = DenseState::from_amplitudes(3, d, amps);
            ASSERT_NEAR(std::abs(expected.inner(full)), 1.0, 1e-9) << "d=" << d << " q=" << q;
        }
    }
}

TEST(tableau, reduce_rejects) {
    Tableau one(1, 3);
    Rng rng(0);
    MeasurementResult m = one.measure(0, rng);
    ASSERT_THROW(reduce_after_measurement(one, 0, m), InvalidDimension);
    Tableau comp(2, 4);
    ASSERT_THROW(reduce_after_measurement(comp, 0, MeasurementResult{}), CompositeDimension);
}

TEST(tableau, serialize_round_trip) {
    auto rng = test_util::independent_test_rng(15);
    for (uint32_t d : {2u, 3u, 6u}) {
        Tableau t = test_util::random_tableau(3, d, rng);
        ASSERT_EQ(Tableau::deserialize(t.serialize()), t);
    }
    Tableau half(2, 3, false);
    ASSERT_EQ(Tableau::deserialize(half.serialize()), half);
    ASSERT_THROW(Tableau::deserialize("nope"), InvalidTableau);
    ASSERT_THROW(Tableau::deserialize(Tableau(1, 3).serialize() + "9\n"), InvalidTableau);
}

TEST(tableau, from_rows_validates) {
    ASSERT_THROW(Tableau::from_rows(3, {row3({1, 0, 0}, {0, 0, 0}, 0)}, {}), DimensionMismatch);
    Tableau bad = Tableau::from_rows(3, {PauliRow(3, {1}, {0}, 0)}, {PauliRow(3, {1}, {0}, 0)});
    ASSERT_FALSE(bad.is_valid());
    ASSERT_THROW(bad.check_valid(), InvalidTableau);
}

TEST(tableau, to_statevector_matches_dense) {
    auto rng = test_util::independent_test_rng(16);
    for (uint32_t d : {2u, 3u, 4u, 5u, 6u}) {
        for (int trial = 0; trial < 10; ++trial) {
            Circuit c = random_clifford_circuit(2, d, 12, rng);
            DenseState expected = dense_run(c);
            DenseState got = to_statevector(test_util::run_tableau(c));
            ASSERT_NEAR(std::abs(expected.inner(got)), 1.0, 1e-10) << "d=" << d;
        }
    }
    DenseState ghz = to_statevector(ghz_tableau());
    for (std::size_t i : {0u, 13u, 26u}) {
        ASSERT_NEAR(std::abs(ghz[i] - Complex(1 / std::sqrt(3.0))), 0, 1e-12);
    }
}

TEST(tableau, affine_sampler_orbit_is_born_support) {
    auto rng = test_util::independent_test_rng(17);
    for (uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 10; ++trial) {
            Circuit c = random_clifford_circuit(3, d, 15, rng);
            c.measure_all();
            Tableau t = test_util::run_tableau(c);
            AffineSampler s = build_affine_sampler(t, rng);
            test_util::Distribution orbit;
            for (const auto &v : s.orbit()) {
                orbit[v] += std::pow(static_cast<double>(d), -static_cast<double>(s.rank()));
            }
            ASSERT_LT(test_util::max_abs_difference(orbit, test_util::dense_distribution(c)), 1e-10);
            for (const auto &shot : sample_shots(s, 50, rng)) {
                ASSERT_TRUE(orbit.count(shot));
            }
        }
    }
    Tableau comp(2, 6);
    ASSERT_THROW(build_affine_sampler(comp, rng), CompositeDimension);
}
