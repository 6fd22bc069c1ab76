// Copyright 2026 The dipnet Authors
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


// Scenario runner: `dipnet run <file>`, `dipnet validate <file>`, `dipnet typo-ledger`.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dipnet/closedform.h"
#include "dipnet/runner.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitCompute = 3;
constexpr int kExitOracle = 4;

int run_file(const std::string &path, bool force_validate, const std::string &output_dir, unsigned threads) {
    dipnet::Scenario s;
    try {
        s = dipnet::load_scenario(path);
    } catch (const dipnet::ScenarioError &e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitParse;
    }
    if (force_validate) {
        s.mode = dipnet::Mode::validate;
    }
    if (!output_dir.empty()) {
        s.output_dir = output_dir;
    }
    try {
        dipnet::RunResult r = dipnet::run_scenario(s, threads);
        std::cout << dipnet::format_summary(s, r);
    } catch (const dipnet::OracleMismatch &e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return kExitOracle;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement and coherence in dipolar-coupled quantum networks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output_dir;
    long long seed = 0;
    unsigned threads = 0;
    app.add_option("--output-dir", output_dir, "Override the scenario's output_dir");
    app.add_option("--seed", seed, "Accepted for forward compatibility; currently has no effect");
    app.add_option("--threads", threads, "Worker threads for the sweep (0 = hardware count)");

    std::string run_path;
    auto *run = app.add_subcommand("run", "Run a scenario file");
    run->add_option("scenario", run_path, "Scenario file")->required();

    std::string validate_path;
    auto *validate = app.add_subcommand("validate", "Run a scenario, checking every closed form against dense evolution");
    validate->add_option("scenario", validate_path, "Scenario file")->required();

    auto *ledger = app.add_subcommand("typo-ledger", "Print coordinates where the printed closed forms need repair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (*run) {
        return run_file(run_path, false, output_dir, threads);
    }
    if (*validate) {
        return run_file(validate_path, true, output_dir, threads);
    }
    if (*ledger) {
        try {
            std::cout << "# channel row col printed oracle cause\n"
                      << dipnet::format_typo_ledger(dipnet::typo_ledger());
        } catch (const std::exception &e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitCompute;
        }
    }
    return kExitOk;
}
