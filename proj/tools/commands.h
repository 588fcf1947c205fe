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


#ifndef QTAB_TOOLS_COMMANDS_H
#define QTAB_TOOLS_COMMANDS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtab::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kUnsupported = 3,
    kRuntime = 4,
};

/// Raised for backend, strategy or dimension combinations the CLI refuses up front.
class Unsupported : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Sweep {
    double p0 = 0;
    double p1 = 0;
    std::size_t steps = 1;
};

struct RunConfig {
    std::string input;
    std::string backend = "tableau";
    std::string strategy = "direct";
    std::size_t shots = 1;
    uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
    std::optional<Sweep> sweep;
    std::vector<uint32_t> replay;
    std::size_t workers = 0;
    bool reduce = false;
    bool draw = false;
};

Sweep parse_sweep(const std::string &text);
std::vector<uint32_t> parse_replay(const std::string &text);

void cmd_run(const RunConfig &cfg, std::ostream &out, std::ostream &err);
void cmd_sample(const RunConfig &cfg, std::ostream &out);
void cmd_fidelity(const RunConfig &cfg, std::ostream &out);
void cmd_bench(const RunConfig &cfg, std::ostream &out);

}  // namespace qtab::cli

#endif
