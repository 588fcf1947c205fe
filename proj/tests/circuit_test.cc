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

#include "qtab/circuit.h"

#include "gtest/gtest.h"
#include "qtab/errors.h"
#include "test_util.h"

using namespace qtab;

namespace {

Circuit ghz() {
    Circuit c(3, 3, "GHZ");
    c.gate(GateKind::H, 0).gate(GateKind::CNOT, 0, 1).gate(GateKind::CNOT, 1, 2).measure_all();
    return c;
}

}  // namespace

TEST(circuit, build_and_query) {
    Circuit c = ghz();
    ASSERT_EQ(c.num_qudits(), 3u);
    ASSERT_EQ(c.dim(), 3u);
    ASSERT_EQ(c.name(), "GHZ");
    ASSERT_EQ(c.gate_count(), 3u);
    ASSERT_EQ(c.noise_count(), 0u);
    ASSERT_TRUE(c.has_measurement());
    ASSERT_TRUE(c.measurements_are_terminal());
    ASSERT_EQ(c.measured_qudits(), (std::vector<std::size_t>{0, 1, 2}));

    c.gate(GateKind::X, 0);
    ASSERT_FALSE(c.measurements_are_terminal());
}

TEST(circuit, validation) {
    Circuit c(2, 3);
    ASSERT_THROW(c.gate(GateKind::H, 2), IndexOutOfRange);
    ASSERT_THROW(c.gate(GateKind::CNOT, 1, 1), ControlEqualsTarget);
    ASSERT_THROW(c.noise(NoiseModel::depolarizing(0.1, 5), 0), DimensionMismatch);
    ASSERT_THROW(c.measure({}), Error);
    ASSERT_THROW(Circuit(2, 1), InvalidDimension);
}

TEST(circuit, edits) {
    Circuit c(2, 3);
    c.gate(GateKind::H, 0).gate(GateKind::CNOT, 0, 1);
    c.insert(1, Gate::single(GateKind::S, 0));
    ASSERT_EQ(std::get<Gate>(c.ops()[1]), Gate::single(GateKind::S, 0));
    c.replace(1, Gate::single(GateKind::Z, 1));
    ASSERT_EQ(std::get<Gate>(c.ops()[1]), Gate::single(GateKind::Z, 1));
    c.remove(1);
    ASSERT_EQ(c.ops().size(), 2u);
    ASSERT_THROW(c.remove(2), IndexOutOfRange);
    ASSERT_THROW(c.insert(3, Gate::single(GateKind::H, 0)), IndexOutOfRange);

    NoiseModel m = NoiseModel::depolarizing(0.1, 3);
    c.insert_noise_layer(1, m);
    ASSERT_EQ(c.noise_count(), 2u);
    ASSERT_EQ(c.models().size(), 1u);
    c.add_noise_after_each_gate(m);
    ASSERT_EQ(c.noise_count(), 4u);
    ASSERT_EQ(c.models().size(), 1u);
    ASSERT_EQ(std::get<NoiseOp>(c.ops().back()).qudit, 1u);

    c.measure_all();
    c.shift_noise_to_end();
    ASSERT_TRUE(std::holds_alternative<Gate>(c.ops()[0]));
    ASSERT_TRUE(std::holds_alternative<Gate>(c.ops()[1]));
    for (std::size_t i = 2; i < 6; ++i) {
        ASSERT_TRUE(std::holds_alternative<NoiseOp>(c.ops()[i]));
    }
    ASSERT_TRUE(std::holds_alternative<MeasureOp>(c.ops()[6]));
}

TEST(circuit, inverse_and_mirror) {
    auto rng = test_util::independent_test_rng(30);
    for (uint32_t d : {2u, 3u, 4u, 6u}) {
        Circuit c = random_clifford_circuit(3, d, 20, rng);
        Tableau t = test_util::run_tableau(c.mirror());
        ASSERT_EQ(t, Tableau(3, d));
        ASSERT_EQ(c.inverse().inverse(), c);
    }
    Circuit noisy(1, 3);
    noisy.noise(NoiseModel::dephasing(0.2, 3), 0);
    ASSERT_THROW(noisy.inverse(), NotInvertibleCircuit);
    ASSERT_THROW(ghz().inverse(), NotInvertibleCircuit);
}

TEST(circuit, compose) {
    Circuit a(2, 3);
    a.gate(GateKind::H, 0).noise(NoiseModel::dephasing(0.1, 3), 1);
    Circuit b(2, 3);
    b.noise(NoiseModel::dit_flip(0.2, 3), 0).gate(GateKind::CZ, 0, 1);
    Circuit ab = compose(a, b);
    ASSERT_EQ(ab.ops().size(), 4u);
    ASSERT_EQ(ab.models().size(), 2u);
    ASSERT_EQ(ab.model(std::get<NoiseOp>(ab.ops()[2]).model), NoiseModel::dit_flip(0.2, 3));
    ASSERT_THROW(compose(a, Circuit(3, 3)), DimensionMismatch);
}

TEST(circuit, realize_noise) {
    Circuit c(1, 3);
    c.gate(GateKind::H, 0).noise(NoiseModel::dit_flip(1.0, 3), 0);
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        Circuit r = c.realize_noise(rng);
        ASSERT_EQ(r.noise_count(), 0u);
        ASSERT_EQ(r.gate_count(), 2u);
        const Gate &g = std::get<Gate>(r.ops()[1]);
        ASSERT_EQ(g.kind, GateKind::W);
        ASSERT_NE(g.a, 0u);
        ASSERT_EQ(g.b, 0u);
    }
}

TEST(circuit, serialize_round_trip) {
    Circuit c(3, 5, "demo");
    c.gate(GateKind::H, 0, true)
        .gate(GateKind::CNOT, 0, 2)
        .gate(GateKind::CZ, 2, 1, true)
        .weyl(2, 3, 1)
        .noise(NoiseModel::depolarizing(0.125, 5), 1)
        .noise(NoiseModel::custom(5, [] {
                   std::vector<double> w(25, 0.0);
                   w[0] = 0.5;
                   w[7] = 0.25;
                   w[24] = 0.25;
                   return w;
               }()),
               2)
        .measure({2, 0});
    std::string text = c.serialize();
    ASSERT_EQ(Circuit::parse(text), c);
    ASSERT_EQ(Circuit::parse(text).serialize(), text);

    auto rng = test_util::independent_test_rng(31);
    for (uint32_t d : {2u, 3u, 6u}) {
        Circuit r = random_clifford_circuit(3, d, 30, rng);
        ASSERT_EQ(Circuit::parse(r.serialize()), r);
    }
}

TEST(circuit, parse_text) {
    Circuit c = Circuit::parse(
        "# a comment\n"
        "QQC 1\n"
        "dim 3\n"
        "qudits 2\n"
        "\n"
        "H 0   # trailing comment\n"
        "CX 0 1\n"
        "SDAG 1\n"
        "W(1,2) 0\n"
        "NOISE DEPOL(0.1) 1\n"
        "M 0 1\n");
    Circuit expected(2, 3);
    expected.gate(GateKind::H, 0)
        .gate(GateKind::CNOT, 0, 1)
        .gate(GateKind::S, 1, true)
        .weyl(1, 2, 0)
        .noise(NoiseModel::depolarizing(0.1, 3), 1)
        .measure({0, 1});
    ASSERT_EQ(c, expected);
}

TEST(circuit, parse_errors_carry_line_numbers) {
    auto line_of = [](const std::string &text) -> std::size_t {
        try {
            Circuit::parse(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return 0;
    };
    ASSERT_EQ(line_of("QQX 1\n"), 1u);
    ASSERT_EQ(line_of("QQC 1\ndim 1\nqudits 2\n"), 2u);
    ASSERT_EQ(line_of("QQC 1\ndim 3\nqudits 0\n"), 3u);
    ASSERT_EQ(line_of("QQC 1\ndim 3\nqudits 2\nFOO 0\n"), 4u);
    ASSERT_EQ(line_of("QQC 1\ndim 3\nqudits 2\nH 2\n"), 4u);
    ASSERT_EQ(line_of("QQC 1\ndim 3\nqudits 2\nH 0\nCNOT 1 1\n"), 5u);
    ASSERT_EQ(line_of("QQC 1\ndim 3\nqudits 2\nCNOT 1\n"), 4u);
    ASSERT_EQ(line_of("QQC 1\ndim 3\nqudits 2\nW(3,0) 1\n"), 4u);
    ASSERT_EQ(line_of("QQC 1\ndim 3\nqudits 2\nNOISE DEPOL(2) 1\n"), 4u);
    ASSERT_EQ(line_of("QQC 1\ndim 3\nqudits 2\nM\n"), 4u);
    ASSERT_EQ(line_of("QQC 1\ndim 3\n"), 2u);
    ASSERT_EQ(line_of(""), 1u);
}

TEST(circuit, render_ascii) {
    ASSERT_EQ(ghz().render_ascii(),
              "q0: -H-*-M---\n"
              "q1: ---+-*-M-\n"
              "q2: -----+-M-\n");

    Circuit c(3, 3);
    c.gate(GateKind::SWAP, 0, 2).noise(NoiseModel::depolarizing(0.1, 3), 1);
    std::string s = c.render_ascii();
    ASSERT_NE(s.find("q0: -x-"), std::string::npos) << s;
    ASSERT_NE(s.find("q1: -|-~N0-"), std::string::npos) << s;
    ASSERT_NE(s.find("noise: N0=DEPOL(0.1)"), std::string::npos) << s;
}

TEST(circuit, random_clifford_circuit_is_deterministic) {
    Rng a(7);
    Rng b(7);
    ASSERT_EQ(random_clifford_circuit(4, 3, 50, a), random_clifford_circuit(4, 3, 50, b));
}
