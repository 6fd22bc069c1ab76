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


#include "dipnet/runner.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dipnet {

namespace {

template <typename... Args>
std::string fmt(const char *format, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), format, args...);
    return buf;
}

double unsigned_zero(double v) {
    return v == 0 ? 0.0 : v;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << content;
    out.close();
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

size_t count_kind(const std::vector<EventRecord> &events, EventKind k) {
    return std::count_if(events.begin(), events.end(), [&](const EventRecord &e) { return e.kind == k; });
}

}  // namespace

std::vector<SeriesEvents> analyze(const Scenario &s, const std::vector<MeasureSeries> &series) {
    std::vector<SeriesEvents> out;
    for (const MeasureSeries &ms : series) {
        SeriesEvents se;
        auto eval = point_evaluator(s.network, s.grid, ms.channel, ms.quantifier, ms.eps_tilde, s.mode);
        se.events = detect_zero_intervals(ms, s.zero_tol, eval);
        double prominence = std::max(s.prominence_frac * ms.max_value(), s.zero_tol);
        for (auto &e : count_peaks(ms, prominence)) {
            se.events.push_back(e);
        }
        if (ms.quantifier == Quantifier::tangle) {
            for (auto &e : detect_sudden_changes(ms, s.slope_jump_tol)) {
                se.events.push_back(e);
            }
            if (s.network.kind == NetworkKind::MM && !(ms.min_value() > 0)) {
                se.warning = fmt("tangle series reaches zero (min=%.6g), expected strictly positive",
                                 ms.min_value());
            }
        }
        std::stable_sort(se.events.begin(), se.events.end(),
                         [](const EventRecord &a, const EventRecord &b) { return a.tau < b.tau; });
        out.push_back(std::move(se));
    }
    return out;
}

std::string format_csv(const Scenario &s, const std::vector<MeasureSeries> &series) {
    std::string out = "scenario,channel,quantifier,eps_tilde,tau,value\n";
    for (const MeasureSeries &ms : series) {
        std::string prefix = s.name + "," + std::string(to_string(ms.channel)) + "," +
                             std::string(to_string(ms.quantifier)) + ",";
        for (const SeriesPoint &p : ms.points) {
            out += prefix;
            out += fmt("%.12g,%.12g,%.12g\n", unsigned_zero(ms.eps_tilde), unsigned_zero(p.tau),
                       unsigned_zero(p.value));
        }
    }
    return out;
}

std::string format_events(const Scenario &s, const std::vector<MeasureSeries> &series,
                          const std::vector<SeriesEvents> &events) {
    std::string out = "# scenario=" + s.name + " network=" + std::string(to_string(s.network.kind)) +
                      fmt(" zero_tol=%g prominence_frac=%g slope_jump_tol=%g\n", s.zero_tol, s.prominence_frac,
                          s.slope_jump_tol);
    for (size_t i = 0; i < series.size(); i++) {
        const MeasureSeries &ms = series[i];
        const auto &ev = events[i].events;
        out += fmt("# channel=%s quantifier=%s eps_tilde=%g min=%.6f max=%.6f deaths=%zu births=%zu peaks=%zu\n",
                   std::string(to_string(ms.channel)).c_str(), std::string(to_string(ms.quantifier)).c_str(),
                   unsigned_zero(ms.eps_tilde), unsigned_zero(ms.min_value()), unsigned_zero(ms.max_value()),
                   count_kind(ev, EventKind::death), count_kind(ev, EventKind::birth),
                   count_kind(ev, EventKind::peak));
        if (events[i].warning) {
            out += "# warning: " + *events[i].warning + "\n";
        }
        for (const EventRecord &e : ev) {
            out += fmt("%s tau=%.4f value=%.6f", std::string(to_string(e.kind)).c_str(), unsigned_zero(e.tau),
                       unsigned_zero(e.value));
            if (e.interval_end) {
                out += fmt(" interval_end=%.4f", unsigned_zero(*e.interval_end));
            }
            out += "\n";
        }
    }
    return out;
}

std::string format_plot_script(const Scenario &s, const std::string &csv_name) {
    std::string out;
    out += "# Plots for scenario " + s.name + ". Run with: python3 " + s.name + "_plot.py\n";
    out += R"(import csv
import os
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
)";
    out += "csv_path = os.path.join(here, \"" + csv_name + "\")\n";
    out += "name = \"" + s.name + "\"\n";
    out += R"(
series = defaultdict(lambda: defaultdict(list))
with open(csv_path, newline="") as f:
    for row in csv.DictReader(f):
        key = (row["channel"], row["quantifier"])
        series[key][row["eps_tilde"]].append((float(row["tau"]), float(row["value"])))

styles = ["-", "--", ":", "-."]
for (channel, quantifier), by_eps in series.items():
    fig, ax = plt.subplots(figsize=(6, 4))
    for k, (eps, pts) in enumerate(by_eps.items()):
        taus, values = zip(*pts)
        ax.plot(taus, values, styles[k % len(styles)], label="eps_tilde=" + eps)
    ax.set_xlabel("tau")
    ax.set_ylabel(quantifier)
    ax.set_title("rho" + channel)
    ax.legend()
    fig.tight_layout()
    fig.savefig(os.path.join(here, "%s_rho%s_%s.png" % (name, channel, quantifier)), dpi=120)
    plt.close(fig)
)";
    return out;
}

RunResult run_scenario(const Scenario &s, unsigned threads) {
    RunResult r;
    r.series = sweep(s.network, s.grid, s.mode, threads);
    r.events = analyze(s, r.series);

    std::error_code ec;
    std::filesystem::create_directories(s.output_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + s.output_dir.string() + ": " + ec.message());
    }
    std::string csv_name = s.name + ".csv";
    r.csv_path = s.output_dir / csv_name;
    r.events_path = s.output_dir / (s.name + "_events.txt");
    write_file(r.csv_path, format_csv(s, r.series));
    write_file(r.events_path, format_events(s, r.series, r.events));
    if (s.emit_plot_script) {
        r.plot_path = s.output_dir / (s.name + "_plot.py");
        write_file(*r.plot_path, format_plot_script(s, csv_name));
    }
    return r;
}

std::string format_summary(const Scenario &s, const RunResult &r) {
    std::string out = "scenario " + s.name + " (" + std::string(to_string(s.network.kind)) + ", " +
                      std::string(to_string(s.mode)) + ")\n";
    for (size_t i = 0; i < r.series.size(); i++) {
        const MeasureSeries &ms = r.series[i];
        const auto &ev = r.events[i].events;
        out += fmt("  rho%-4s %-10s eps=%-5g min=%.6f max=%.6f deaths=%zu births=%zu peaks=%zu sudden=%zu\n",
                   std::string(to_string(ms.channel)).c_str(), std::string(to_string(ms.quantifier)).c_str(),
                   unsigned_zero(ms.eps_tilde), unsigned_zero(ms.min_value()), unsigned_zero(ms.max_value()),
                   count_kind(ev, EventKind::death), count_kind(ev, EventKind::birth),
                   count_kind(ev, EventKind::peak), count_kind(ev, EventKind::sudden_change));
        if (r.events[i].warning) {
            out += "    warning: " + *r.events[i].warning + "\n";
        }
    }
    out += "wrote " + r.csv_path.string() + "\nwrote " + r.events_path.string() + "\n";
    if (r.plot_path) {
        out += "wrote " + r.plot_path->string() + "\n";
    }
    return out;
}

}  // namespace dipnet
