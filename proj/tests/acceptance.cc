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

// Stand-alone acceptance runner. Prints one PASS or FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "qtab/composite.h"
#include "qtab/noise.h"
#include "test_util.h"

using namespace qtab;
using qtab::test_util::Distribution;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            detail << what;
        }
        pass = pass && ok;
    }
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_seconds;
    std::function<void(Verdict &)> body;
};

std::string g_cli;

PauliRow row3(std::vector<uint32_t> x, std::vector<uint32_t> z, uint32_t r) {
    return PauliRow(3, std::move(x), std::move(z), r);
}

Circuit ghz_circuit() {
    Circuit c(3, 3, "GHZ");
    c.gate(GateKind::H, 0).gate(GateKind::CNOT, 0, 1).gate(GateKind::CNOT, 1, 2);
    return c;
}

std::string run_command(const std::string &cmd, int *code = nullptr) {
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return "";
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, got);
    }
    int status = pclose(pipe);
    if (code != nullptr) {
        *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    return out;
}

std::string write_file(const std::string &name, const std::string &text) {
    std::ofstream(name) << text;
    return name;
}

// Criterion 1.
void golden_ghz(Verdict &v) {
    Tableau t = test_util::run_tableau(ghz_circuit());
    Tableau expected = Tableau::from_rows(
        3, {row3({0, 0, 0}, {1, 0, 0}, 0), row3({0, 1, 1}, {0, 0, 0}, 0), row3({0, 0, 1}, {0, 0, 0}, 0)},
        {row3({2, 2, 2}, {0, 0, 0}, 0), row3({0, 0, 0}, {2, 1, 0}, 0), row3({0, 0, 0}, {0, 2, 1}, 0)});
    v.require(t == expected, "GHZ tableau differs:\n" + t.str());
}

// Criterion 2.
void golden_replay(Verdict &v) {
    Tableau t = test_util::run_tableau(ghz_circuit());
    Rng rng(0);
    MeasurementResult m0 = t.measure(0, rng, 2u);
    MeasurementResult m1 = t.measure(1, rng);
    MeasurementResult m2 = t.measure(2, rng);
    Tableau expected = Tableau::from_rows(
        3, {row3({1, 1, 1}, {0, 0, 0}, 0), row3({0, 1, 1}, {0, 0, 0}, 0), row3({0, 0, 1}, {0, 0, 0}, 0)},
        {row3({0, 0, 0}, {1, 0, 0}, 2), row3({0, 0, 0}, {2, 1, 0}, 0), row3({0, 0, 0}, {0, 2, 1}, 0)});
    v.require(m0.random && m0.outcome == 2, "first measurement was not a random draw of 2");
    v.require(t == expected, "post-measurement tableau differs:\n" + t.str());
    v.require(!m1.random && m1.outcome == 2 && !m2.random && m2.outcome == 2, "q1, q2 not deterministic 2, 2");

    // The same walkthrough through the command line.
    std::string path = write_file("acceptance_ghz.qqc", ghz_circuit().serialize() + "M 0 1 2\n");
    int code = -1;
    std::string out = run_command(g_cli + " run -i " + path + " --replay 2", &code);
    v.require(code == 0, "cli run exited with " + std::to_string(code));
    v.require(out.find("Post-measurement tableau\n" + expected.str() + "\nMeasurement result: [2 2 2]\n") !=
                  std::string::npos,
              "cli output differs:\n" + out);
}

// Criterion 3.
void golden_reduction(Verdict &v) {
    Tableau t = Tableau::from_rows(
        3, {row3({0, 0, 0}, {0, 2, 0}, 2), row3({2, 0, 2}, {1, 0, 2}, 0), row3({0, 0, 1}, {0, 2, 1}, 4)},
        {row3({1, 1, 1}, {0, 0, 0}, 0), row3({0, 0, 0}, {2, 1, 0}, 2), row3({0, 0, 0}, {2, 0, 1}, 0)});
    Rng rng(0);
    MeasurementResult m2 = t.measure(2, rng, 1u);
    v.require(m2.random && m2.outcome == 1, "m2 was not a random draw of 1");
    Tableau after = Tableau::from_rows(
        3, {row3({1, 1, 1}, {0, 0, 0}, 0), row3({0, 1, 0}, {1, 0, 2}, 0), row3({2, 2, 0}, {0, 2, 1}, 4)},
        {row3({0, 0, 0}, {0, 0, 1}, 4), row3({0, 0, 0}, {2, 1, 0}, 2), row3({0, 0, 0}, {2, 0, 1}, 0)});
    v.require(t == after, "post-measurement tableau differs:\n" + t.str());

    Tableau r1 = reduce_after_measurement(t, 2, m2);
    auto row = [](std::vector<uint32_t> x, std::vector<uint32_t> z, uint32_t r) { return PauliRow(3, x, z, r); };
    Tableau first = Tableau::from_rows(3, {row({0, 1}, {1, 0}, 0), row({2, 2}, {0, 2}, 4)},
                                       {row({0, 0}, {2, 1}, 2), row({0, 0}, {2, 0}, 2)});
    v.require(r1 == first, "first reduced tableau differs:\n" + r1.str());

    MeasurementResult m1 = r1.measure(1, rng);
    v.require(!m1.random && m1.outcome == 0, "m1 was not a deterministic 0");

    // The destabilizer update d1 <- d1 * d2 picks up phase 0 + 4 + 2 (1*2 + 0*2) = 8 = 2 (mod 6).
    PauliRow merged = compose(row({0, 1}, {1, 0}, 0), row({2, 2}, {0, 2}, 4));
    v.require(merged == row({2, 0}, {1, 2}, 2), "destabilizer merge phase is not 2");

    Tableau r2 = reduce_after_measurement(r1, 1, m1);
    Tableau last = Tableau::from_rows(3, {PauliRow(3, {2}, {1}, 2)}, {PauliRow(3, {0}, {2}, 2)});
    v.require(r2 == last, "final reduced tableau differs:\n" + r2.str());
    MeasurementResult m0 = r2.measure(0, rng);
    v.require(!m0.random && m0.outcome == 1, "remaining qutrit is not a deterministic 1");
}

// Criterion 4.
void master_conjugation(Verdict &v) {
    Rng rng(400);
    std::size_t checks = 0;
    double worst = 0;
    for (uint32_t d : {2u, 3u, 4u, 5u}) {
        for (std::size_t n : {1u, 2u}) {
            std::vector<PauliRow> generators;
            for (std::size_t q = 0; q < n; ++q) {
                generators.push_back(PauliRow::single_x(n, d, q));
                generators.push_back(PauliRow::single_z(n, d, q));
            }
            for (const Gate &g : test_util::every_gate(n, d)) {
                ComplexMatrix u = gate_matrix(g, n, d);
                // Rows of a random tableau carry mixed exponents and nonzero phases.
                std::vector<PauliRow> rows = generators;
                const Tableau sample_tableau = test_util::random_tableau(n, d, rng);
                rows.insert(rows.end(), sample_tableau.rows().begin(), sample_tableau.rows().end());
                for (const PauliRow &p : rows) {
                    PauliRow updated = p;
                    apply_gate_to_row(updated, g);
                    double diff = dense_row(updated).max_abs_diff(u * dense_row(p) * u.adjoint());
                    worst = std::max(worst, diff);
                    ++checks;
                    v.require(diff < 1e-12, g.name() + " on " + to_operator_string(p) + " d=" + std::to_string(d));
                }
            }
        }
    }
    v.detail << checks << " checks, worst deviation " << worst;
    v.require(checks >= 1000, "fewer than 1000 checks");
}

// Criterion 5.
void born_rule_prime(Verdict &v) {
    Rng rng(500);
    const uint32_t dims[] = {2, 3, 5};
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + i % 3;
        uint32_t d = dims[(i / 3) % 3];
        Circuit c = random_clifford_circuit(n, d, 4 * n + 4, rng);
        c.measure_all();
        AffineSampler s = build_affine_sampler(test_util::run_tableau(c), rng);
        Distribution orbit;
        for (const auto &point : s.orbit()) {
            orbit[point] += std::pow(static_cast<double>(d), -static_cast<double>(s.rank()));
        }
        Distribution exact = test_util::dense_distribution(c);
        std::set<std::vector<uint32_t>> a, b;
        for (const auto &[k, p] : orbit) {
            a.insert(k);
        }
        for (const auto &[k, p] : exact) {
            if (p > 1e-9) {
                b.insert(k);
            }
        }
        double diff = test_util::max_abs_difference(orbit, exact);
        worst = std::max(worst, diff);
        v.require(a == b, "support mismatch on circuit " + std::to_string(i) + "\n" + c.serialize());
        v.require(diff < 1e-10, "probability mismatch on circuit " + std::to_string(i));
    }
    v.detail << "200 circuits, worst probability deviation " << worst;
}

// Criterion 6.
void composite_sampling(Verdict &v) {
    Rng rng(600);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        std::size_t n = 1 + i % 2;
        uint32_t d = (i / 2) % 2 == 0 ? 4 : 6;
        Circuit c = random_clifford_circuit(n, d, 4 * n + 4, rng);
        c.measure_all();
        SnfSampler s = SnfSampler::build(test_util::run_tableau(c));
        auto shots = s.sample(10000, rng);
        Distribution exact = test_util::dense_distribution(c);
        for (const auto &shot : shots) {
            if (exact.find(shot) == exact.end()) {
                v.require(false, "emitted outcome outside the dense support on circuit " + std::to_string(i));
                break;
            }
        }
        double tv = test_util::total_variation(test_util::empirical(shots), exact);
        worst = std::max(worst, tv);
        v.require(tv <= 0.05, "TV " + std::to_string(tv) + " on circuit " + std::to_string(i));
    }
    v.detail << "50 circuits, worst TV " << worst;
}

// Criterion 7.
void ghz_statistics(Verdict &v) {
    Circuit c = ghz_circuit();
    c.measure_all();
    const std::size_t shots = 3000;
    ShotTable table = sample(c, Strategy::kDirect, shots, RunOptions{7, 1});
    std::map<uint32_t, std::size_t> counts;
    for (const auto &row : table) {
        bool equal = row[0] == row[1] && row[1] == row[2];
        v.require(equal, "outcome outside {000, 111, 222}");
        counts[row[0]]++;
    }
    const double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / shots);
    for (uint32_t k = 0; k < 3; ++k) {
        double f = static_cast<double>(counts[k]) / shots;
        v.detail << k << k << k << ":" << f << " ";
        v.require(std::abs(f - 1.0 / 3) <= 3 * sigma, "frequency off by more than 3 sigma");
    }
}

Circuit random_noisy_circuit(std::size_t n, uint32_t d, std::size_t sites, Rng &rng) {
    Circuit gates = random_clifford_circuit(n, d, 3 * n + 3, rng);
    std::vector<std::size_t> positions;
    for (std::size_t k = 0; k < sites; ++k) {
        positions.push_back(rng.uniform(gates.ops().size() + 1));
    }
    std::sort(positions.begin(), positions.end());
    Circuit c(n, d);
    std::size_t next = 0;
    auto place_noise = [&](std::size_t at) {
        while (next < positions.size() && positions[next] == at) {
            double p = 0.05 + 0.45 * rng.uniform01();
            std::size_t q = rng.uniform(n);
            switch (rng.uniform(3)) {
                case 0:
                    c.noise(NoiseModel::depolarizing(p, d), q);
                    break;
                case 1:
                    c.noise(NoiseModel::dephasing(p, d), q);
                    break;
                default:
                    c.noise(NoiseModel::dit_flip(p, d), q);
                    break;
            }
            ++next;
        }
    };
    for (std::size_t i = 0; i < gates.ops().size(); ++i) {
        place_noise(i);
        c.append(gates.ops()[i]);
    }
    place_noise(gates.ops().size());
    c.measure_all();
    return c;
}

// Criterion 8.
void strategy_equivalence(Verdict &v) {
    Rng rng(800);
    const uint32_t dims[] = {2, 3, 5};
    const std::size_t shots = 10000;
    double worst_pair = 0;
    double worst_exact = 0;
    int failures = 0;
    std::size_t largest_support = 0;
    std::ostringstream failed;
    for (int i = 0; i < 50; ++i) {
        std::size_t n = 1 + i % 3;
        uint32_t d = dims[(i / 3) % 3];
        std::size_t sites = 1 + (i / 9) % 4;
        Circuit c = random_noisy_circuit(n, d, sites, rng);
        largest_support = std::max(largest_support, test_util::dense_distribution(c).size());

        // Independent seeds per strategy, so the comparison is between independent samples.
        std::vector<Distribution> dists;
        const Strategy strategies[] = {Strategy::kDirect, Strategy::kFrames, Strategy::kPush};
        for (int s = 0; s < 3; ++s) {
            dists.push_back(test_util::empirical(sample(c, strategies[s], shots, RunOptions{uint64_t(i * 3 + s), 0})));
        }
        double pair = 0;
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                pair = std::max(pair, test_util::total_variation(dists[a], dists[b]));
            }
        }
        worst_pair = std::max(worst_pair, pair);
        if (pair > 0.05) {
            ++failures;
            failed << " #" << i << "(n=" << n << ",d=" << d << ",support=" << test_util::dense_distribution(c).size()
                   << ",TV=" << pair << ")";
        }
        if (sites <= 2) {
            double diff = test_util::max_abs_difference(enumerate_noisy_distribution(c), test_util::dense_distribution(c));
            worst_exact = std::max(worst_exact, diff);
            v.require(diff <= 1e-10, "exact enumeration differs from dense on circuit " + std::to_string(i) + "; ");
        }
    }
    v.require(failures == 0, std::to_string(failures) + " circuit(s) above pairwise TV 0.05:" + failed.str() + "; ");
    v.detail << "worst pairwise TV " << worst_pair << ", largest support " << largest_support
             << ", worst exact deviation " << worst_exact;
}

// Criterion 9.
void fidelity_sweep(Verdict &v) {
    const std::size_t shots = 10000;
    double worst_sigma = 0;
    for (int step = 1; step <= 9; ++step) {
        const double p = step / 10.0;
        Circuit c(2, 3);
        c.gate(GateKind::H, 0).gate(GateKind::CNOT, 0, 1).noise(NoiseModel::depolarizing(p, 3), 0);
        c.gate(GateKind::CNOT, 0, 1, true).gate(GateKind::H, 0, true);
        const double dense = dense_fidelity(dense_run_mixed(c), DenseState(2, 3));
        const double sigma = std::sqrt(p * (1 - p) / shots);
        v.require(std::abs(dense - (1 - p)) < 1e-10, "dense survival is not 1 - p at p=" + std::to_string(p));
        RunOptions opts{static_cast<uint64_t>(900 + step), 0};
        for (const auto &[method, est] :
             {std::pair{"push", fidelity_push(c, shots, opts)}, std::pair{"frames", fidelity_frames(c, shots, opts)}}) {
            double z = std::abs(est.estimate - (1 - p)) / sigma;
            double zd = std::abs(est.estimate - dense) / sigma;
            worst_sigma = std::max({worst_sigma, z, zd});
            v.require(z <= 3 && zd <= 3, std::string(method) + " estimate " + std::to_string(est.estimate) +
                                              " at p=" + std::to_string(p) + "; ");
        }
    }
    v.detail << "worst deviation " << worst_sigma << " sigma";
}

// Criterion 10.
void prop_one_biconditional(Verdict &v) {
    Rng rng(1000);
    const uint32_t d = 3;
    std::size_t draws = 0;
    std::size_t zero = 0;
    for (int i = 0; i < 20; ++i) {
        std::size_t n = 1 + i % 2;
        Circuit before = random_clifford_circuit(n, d, 3 + rng.uniform(6), rng);
        Circuit after = random_clifford_circuit(n, d, 3 + rng.uniform(6), rng);
        std::size_t q = rng.uniform(n);
        Circuit c = before;
        c.noise(NoiseModel::depolarizing(0.5, d), q);
        c = compose(c, after);
        PushPlan plan = build_push_plan(c);
        ComplexMatrix a = circuit_unitary(before);
        for (uint32_t x = 0; x < d; ++x) {
            for (uint32_t z = 0; z < d; ++z) {
                std::vector<uint32_t> delta = plan.delta_for({{x, z}});
                bool no_shift = std::all_of(delta.begin() + static_cast<std::ptrdiff_t>(n), delta.end(),
                                            [](uint32_t e) { return e == 0; });
                Circuit w(n, d);
                w.weyl(x, z, q);
                bool z_type = (a.adjoint() * circuit_unitary(w) * a).is_diagonal(1e-9);
                ++draws;
                zero += no_shift;
                v.require(no_shift == z_type, "mismatch on circuit " + std::to_string(i) + " draw W(" +
                                                  std::to_string(x) + "," + std::to_string(z) + "); ");
            }
        }
    }
    v.detail << draws << " draws, " << zero << " with zero stabilizer shift";
}

template <typename F>
double min_seconds(int repeats, F &&body) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto start = std::chrono::steady_clock::now();
        body();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

// Criterion 11.
void scaling(Verdict &v) {
    const uint32_t d = 3;
    auto affine_time = [&](std::size_t n) {
        // Rank-4 X-block spread over every qudit.
        Tableau t(n, d);
        for (std::size_t q = 0; q < 4; ++q) {
            t.apply(Gate::single(GateKind::H, q));
        }
        for (std::size_t q = 4; q < n; ++q) {
            t.apply(Gate::pair(GateKind::CNOT, q % 4, q));
            t.apply(Gate::single(GateKind::S, q));
        }
        Rng rng(1100);
        AffineSampler s = build_affine_sampler(t, rng);
        v.require(s.rank() == 4, "affine rank is not 4");
        const std::size_t shots = 20000;
        std::vector<uint32_t> buf(n);
        uint64_t sink = 0;
        double secs = min_seconds(7, [&] {
            for (std::size_t i = 0; i < shots; ++i) {
                s.sample_into(rng, buf.data());
                sink += buf[i % n];
            }
        });
        if (sink == 42) {
            std::cerr << "";
        }
        return secs / shots;
    };
    double a64 = affine_time(64);
    double a128 = affine_time(128);
    double affine_ratio = a128 / a64;
    v.require(affine_ratio <= 2.5, "affine ratio " + std::to_string(affine_ratio) + " above 2.5; ");

    auto push_time = [&](std::size_t sites) {
        const std::size_t n = 32;
        Rng rng(1101);
        Circuit c(n, d);
        for (std::size_t k = 0; k < sites; ++k) {
            Circuit g = random_clifford_circuit(n, d, 2, rng);
            for (const auto &op : g.ops()) {
                c.append(op);
            }
            c.noise(NoiseModel::depolarizing(0.01, d), rng.uniform(n));
        }
        c.measure_all();
        PushPlan plan = build_push_plan(c);
        const std::size_t shots = 2000;
        uint64_t sink = 0;
        double secs = min_seconds(5, [&] {
            for (std::size_t s = 0; s < shots; ++s) {
                Rng noise = Rng::for_stream(0, Stream::kNoise, s);
                sink += plan.draw_delta(noise)[n];
            }
        });
        if (sink == 42) {
            std::cerr << "";
        }
        return secs / shots;
    };
    double p256 = push_time(256);
    double p512 = push_time(512);
    double push_ratio = p512 / p256;
    v.require(push_ratio >= 1.5 && push_ratio <= 3.0, "push ratio " + std::to_string(push_ratio) + " outside [1.5, 3]; ");
    v.detail << "affine n=64->128 ratio " << affine_ratio << ", push N=256->512 ratio " << push_ratio;
}

// Criterion 12.
void cli_determinism(Verdict &v) {
    std::string ghz = write_file("acceptance_ghz.qqc", ghz_circuit().serialize() + "M 0 1 2\n");
    std::string noisy = write_file("acceptance_noisy.qqc",
                                   "QQC 1\ndim 3\nqudits 3\nH 0\nNOISE DEPOL(0.2) 0\nCNOT 0 1\nNOISE FLIP(0.1) 1\n"
                                   "S 2\nCZ 1 2\nNOISE DEPHASE(0.3) 2\nM 0 1 2\n");
    std::string composite = write_file("acceptance_comp.qqc",
                                       "QQC 1\ndim 6\nqudits 2\nH 0\nCNOT 0 1\nNOISE DEPOL(0.1) 1\nM 0 1\n");
    std::string mirror = write_file("acceptance_mirror.qqc",
                                    "QQC 1\ndim 3\nqudits 2\nH 0\nCNOT 0 1\nNOISE DEPOL(0.3) 0\nCNOTDAG 0 1\nHDAG 0\n");
    const std::vector<std::string> invocations = {
        "run -i " + ghz + " --draw",
        "run -i " + noisy + " --seed 5",
        "run -i " + ghz + " --reduce --seed 2",
        "sample -i " + noisy + " --shots 2000 --strategy direct --seed 3",
        "sample -i " + noisy + " --shots 2000 --strategy frames --seed 3 --format json",
        "sample -i " + noisy + " --shots 2000 --strategy push --seed 3 --format text",
        "sample -i " + composite + " --shots 2000 --strategy push --seed 4",
        "sample -i " + noisy + " --shots 500 --backend dense --seed 4",
        "fidelity -i " + mirror + " --shots 5000 --seed 6 --sweep 0:0.9:10",
        "fidelity -i " + mirror + " --shots 5000 --seed 6 --strategy frames",
    };
    int count = 0;
    for (const auto &args : invocations) {
        for (const char *workers : {"1", "4"}) {
            int c1 = -1, c2 = -1;
            std::string a = run_command(g_cli + " " + args + " --workers " + workers, &c1);
            std::string b = run_command(g_cli + " " + args + " --workers " + workers, &c2);
            std::string one = run_command(g_cli + " " + args + " --workers 1");
            v.require(c1 == 0 && c2 == 0, "'" + args + "' failed; ");
            v.require(!a.empty() && a == b && a == one, "'" + args + "' output differs between runs; ");
            ++count;
        }
    }
    // Timing columns are wall-clock measurements; everything else must repeat exactly.
    auto strip_seconds = [](const std::string &csv) {
        std::istringstream in(csv);
        std::string line, out;
        while (std::getline(in, line)) {
            out += line.substr(0, line.rfind(',')) + "\n";
        }
        return out;
    };
    std::string b1 = run_command(g_cli + " bench --shots 1 --seed 1");
    std::string b2 = run_command(g_cli + " bench --shots 1 --seed 1");
    v.require(!b1.empty() && strip_seconds(b1) == strip_seconds(b2), "bench rows differ; ");
    v.detail << count << " invocations repeated byte-identically; bench compared without its timing column";
}

}  // namespace

int main(int argc, char **argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--cli") == 0) {
            g_cli = argv[i + 1];
        }
    }
    if (g_cli.empty()) {
        std::cerr << "usage: qtab_acceptance --cli <path to qtab>\n";
        return 2;
    }

    const std::vector<Criterion> criteria = {
        {1, "golden GHZ tableau", 1, golden_ghz},
        {2, "golden measurement replay", 1, golden_replay},
        {3, "golden reduction", 1, golden_reduction},
        {4, "master conjugation suite", 30, master_conjugation},
        {5, "Born-rule equivalence (prime d)", 120, born_rule_prime},
        {6, "composite-d sampling", 120, composite_sampling},
        {7, "GHZ sampling statistics", 5, ghz_statistics},
        {8, "noise-strategy equivalence", 300, strategy_equivalence},
        {9, "fidelity sweep", 120, fidelity_sweep},
        {10, "stabilizer phase shift vs Z-type error", 60, prop_one_biconditional},
        {11, "scaling trends", 600, scaling},
        {12, "CLI determinism", 600, cli_determinism},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        Verdict v;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(v);
        } catch (const std::exception &e) {
            v.require(false, std::string("exception: ") + e.what() + "; ");
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        v.require(secs <= c.time_limit_seconds, "took " + std::to_string(secs) + " s; ");
        failed += !v.pass;
        std::printf("%s  %2d  %-40s %8.2fs  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    v.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
