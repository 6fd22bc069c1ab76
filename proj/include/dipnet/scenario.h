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


#ifndef DIPNET_SCENARIO_H
#define DIPNET_SCENARIO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "dipnet/errors.h"
#include "dipnet/scan.h"

namespace dipnet {

/// Diagnostic tied to a scenario key. `line` is 1-based, 0 when the key is absent.
struct ScenarioError : Error {
    ScenarioError(const std::string &what, std::string key, size_t line)
        : Error(what), key(std::move(key)), line(line) {}
    std::string key;
    size_t line;
};

struct ParseError : ScenarioError {
    using ScenarioError::ScenarioError;
};
struct ValidationError : ScenarioError {
    using ScenarioError::ScenarioError;
};
struct UnknownKey : ScenarioError {
    using ScenarioError::ScenarioError;
};

struct Scenario {
    std::string name;
    NetworkConfig network;
    ScanGrid grid;
    Mode mode = Mode::closed_form;
    std::filesystem::path output_dir = "out";
    bool emit_plot_script = false;
    /// Eight-node runs; the bridge lives in grid.bridge_tau / grid.bridge_eps.
    bool extension = false;
    double zero_tol = kDefaultZeroTol;
    double prominence_frac = kDefaultProminenceFrac;
    double slope_jump_tol = kDefaultSlopeJumpTol;
};

/// Flat `key = value` lines, `#` comments, comma-separated lists.
Scenario parse_scenario(std::string_view text);

/// Reads and parses a file. Throws ParseError when it cannot be read.
Scenario load_scenario(const std::filesystem::path &path);

}  // namespace dipnet

#endif
