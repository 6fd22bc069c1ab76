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


#ifndef DIPNET_RUNNER_H
#define DIPNET_RUNNER_H

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dipnet/scenario.h"

namespace dipnet {

struct SeriesEvents {
    std::vector<EventRecord> events;
    /// Set for MM tangle series whose minimum does not exceed zero.
    std::optional<std::string> warning;
};

/// Death/birth intervals and peaks for every series, plus sudden changes for tangle.
std::vector<SeriesEvents> analyze(const Scenario &s, const std::vector<MeasureSeries> &series);

/// header `scenario,channel,quantifier,eps_tilde,tau,value`, %.12g values.
std::string format_csv(const Scenario &s, const std::vector<MeasureSeries> &series);

/// '#' line per series, then `<kind> tau=%.4f value=%.6f [interval_end=%.4f]` per event.
std::string format_events(const Scenario &s, const std::vector<MeasureSeries> &series,
                          const std::vector<SeriesEvents> &events);

/// matplotlib script reading `csv_name` from its own directory.
std::string format_plot_script(const Scenario &s, const std::string &csv_name);

struct RunResult {
    std::filesystem::path csv_path;
    std::filesystem::path events_path;
    std::optional<std::filesystem::path> plot_path;
    std::vector<MeasureSeries> series;
    std::vector<SeriesEvents> events;
};

/// Sweeps, analyzes, then writes every output file. Throws std::runtime_error on I/O failure.
RunResult run_scenario(const Scenario &s, unsigned threads = 0);

/// One line per series: channel, quantifier, eps, min, max and event counts.
std::string format_summary(const Scenario &s, const RunResult &r);

}  // namespace dipnet

#endif
