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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.h"
#include "qtab/errors.h"
#include "qtab/parallel.h"

namespace {

using qtab::cli::RunConfig;

uint64_t seed_from_env() {
    const char *env = std::getenv("QQ_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    return std::stoull(env);
}

void add_common(CLI::App *cmd, RunConfig &cfg, std::string &seed_text, bool needs_input) {
    auto *input = cmd->add_option("-i,--input", cfg.input, "Circuit file");
    if (needs_input) {
        input->required();
    }
    cmd->add_option("--seed", seed_text, "Random seed (falls back to QQ_SEED, then 0)");
    cmd->add_option("-o,--out", cfg.out, "Write output to this file instead of stdout");
    cmd->add_option("--workers", cfg.workers, "Worker threads for shot loops (0 = all cores)");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Stabilizer tableau simulator for qudit Clifford circuits"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string seed_text;
    std::string sweep_text;
    std::string replay_text;

    auto *run = app.add_subcommand("run", "Simulate one shot and print tableaus");
    add_common(run, cfg, seed_text, true);
    run->add_option("--backend", cfg.backend, "tableau")->check(CLI::IsMember({"tableau", "dense"}));
    run->add_option("--replay", replay_text, "Forced outcomes for random measurements, comma separated");
    run->add_flag("--reduce", cfg.reduce, "Remove measured qudits from the final tableau");
    run->add_flag("--draw", cfg.draw, "Print the circuit diagram first");

    auto *smp = app.add_subcommand("sample", "Sample measurement outcomes");
    add_common(smp, cfg, seed_text, true);
    smp->add_option("--backend", cfg.backend, "tableau or dense")->check(CLI::IsMember({"tableau", "dense"}));
    smp->add_option("--strategy", cfg.strategy, "Noise strategy")
        ->check(CLI::IsMember({"direct", "frames", "push"}));
    smp->add_option("--shots", cfg.shots, "Number of shots")->check(CLI::PositiveNumber);
    smp->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));

    auto *fid = app.add_subcommand("fidelity", "Estimate the fidelity of a noisy circuit");
    add_common(fid, cfg, seed_text, true);
    fid->add_option("--backend", cfg.backend, "tableau or dense (exact)")
        ->check(CLI::IsMember({"tableau", "dense"}));
    fid->add_option("--strategy,--method", cfg.strategy, "push or frames")
        ->check(CLI::IsMember({"frames", "push"}));
    fid->add_option("--shots", cfg.shots, "Number of shots")->check(CLI::PositiveNumber);
    fid->add_option("--sweep", sweep_text, "Replace every noise probability with p0..p1 in steps points");

    auto *bench = app.add_subcommand("bench", "Emit gate and qudit scaling timings as CSV");
    add_common(bench, cfg, seed_text, false);
    bench->add_option("--shots", cfg.shots, "Shots per circuit")->check(CLI::PositiveNumber);

    // Per-command defaults that differ from RunConfig's.
    fid->preparse_callback([&](std::size_t) {
        cfg.strategy = "push";
        cfg.shots = 10000;
    });
    bench->preparse_callback([&](std::size_t) { cfg.shots = 100; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? qtab::cli::kOk : qtab::cli::kUsage;
    }

    std::ostringstream out;
    try {
        cfg.seed = seed_text.empty() ? seed_from_env() : std::stoull(seed_text);
        if (cfg.workers == 0) {
            cfg.workers = qtab::default_workers();
        }
        if (!sweep_text.empty()) {
            cfg.sweep = qtab::cli::parse_sweep(sweep_text);
        }
        if (!replay_text.empty()) {
            cfg.replay = qtab::cli::parse_replay(replay_text);
        }
        if (run->parsed()) {
            qtab::cli::cmd_run(cfg, out, std::cerr);
        } else if (smp->parsed()) {
            qtab::cli::cmd_sample(cfg, out);
        } else if (fid->parsed()) {
            qtab::cli::cmd_fidelity(cfg, out);
        } else {
            qtab::cli::cmd_bench(cfg, out);
        }
    } catch (const qtab::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return qtab::cli::kParse;
    } catch (const qtab::cli::Unsupported &e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return qtab::cli::kUnsupported;
    } catch (const qtab::CompositeDimension &e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return qtab::cli::kUnsupported;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return qtab::cli::kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return qtab::cli::kRuntime;
    }

    if (cfg.out.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write '" << cfg.out << "'\n";
            return qtab::cli::kRuntime;
        }
        file << out.str();
    }
    return qtab::cli::kOk;
}
