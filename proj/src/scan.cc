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


#include "dipnet/scan.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "dipnet/closedform.h"
#include "dipnet/measures.h"

namespace dipnet {

std::string_view to_string(Quantifier q) {
    switch (q) {
        case Quantifier::negativity:
            return "negativity";
        case Quantifier::naqc:
            return "naqc";
        case Quantifier::tangle:
            return "tangle";
    }
    return "?";
}

Quantifier quantifier_from_string(std::string_view name) {
    for (Quantifier q : {Quantifier::negativity, Quantifier::naqc, Quantifier::tangle}) {
        if (to_string(q) == name) {
            return q;
        }
    }
    throw std::invalid_argument("unknown quantifier '" + std::string(name) + "' (expected negativity, naqc or tangle)");
}

bool compatible(Channel ch, Quantifier q) {
    return (q == Quantifier::tangle) == (channel_arity(ch) == 3);
}

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::closed_form:
            return "closed_form";
        case Mode::dense:
            return "dense";
        case Mode::validate:
            return "validate";
    }
    return "?";
}

Mode mode_from_string(std::string_view name) {
    for (Mode m : {Mode::closed_form, Mode::dense, Mode::validate}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected closed_form, dense or validate)");
}

std::string_view to_string(EventKind k) {
    switch (k) {
        case EventKind::death:
            return "death";
        case EventKind::birth:
            return "birth";
        case EventKind::peak:
            return "peak";
        case EventKind::sudden_change:
            return "sudden_change";
    }
    return "?";
}

void ScanGrid::validate() const {
    if (!(tau_min < tau_max)) {
        throw std::invalid_argument("tau_min must be smaller than tau_max");
    }
    if (tau_steps < 2) {
        throw std::invalid_argument("tau_steps must be at least 2");
    }
    if (eps_values.empty()) {
        throw std::invalid_argument("eps_values must not be empty");
    }
    if (channels.empty() || quantifiers.empty()) {
        throw std::invalid_argument("channels and quantifiers must not be empty");
    }
    for (Channel ch : channels) {
        if (std::none_of(quantifiers.begin(), quantifiers.end(), [&](Quantifier q) { return compatible(ch, q); })) {
            throw std::invalid_argument("channel " + std::string(to_string(ch)) +
                                        " has no compatible quantifier (tangle needs three nodes, "
                                        "negativity and naqc need two)");
        }
    }
    for (Quantifier q : quantifiers) {
        if (std::none_of(channels.begin(), channels.end(), [&](Channel ch) { return compatible(ch, q); })) {
            throw std::invalid_argument("quantifier " + std::string(to_string(q)) + " has no compatible channel");
        }
    }
}

std::vector<double> ScanGrid::taus() const {
    std::vector<double> out(tau_steps);
    double step = (tau_max - tau_min) / static_cast<double>(tau_steps - 1);
    for (size_t i = 0; i < tau_steps; i++) {
        out[i] = tau_min + step * static_cast<double>(i);
    }
    out.back() = tau_max;
    return out;
}

DipolarParams ScanGrid::bridge_at(const DipolarParams &p) const {
    return {bridge_eps.value_or(p.eps_tilde), bridge_tau.value_or(p.tau)};
}

double MeasureSeries::min_value() const {
    double m = INFINITY;
    for (const auto &pt : points) {
        m = std::min(m, pt.value);
    }
    return m;
}

double MeasureSeries::max_value() const {
    double m = -INFINITY;
    for (const auto &pt : points) {
        m = std::max(m, pt.value);
    }
    return m;
}

DensityMatrix channel_state(const NetworkConfig &cfg, Channel ch, const DipolarParams &p,
                            const DipolarParams &p_bridge, Mode mode) {
    XStateParams pair1 = cfg.pair1();
    XStateParams pair2 = cfg.pair2();
    if (mode == Mode::dense || !has_closed_form(ch)) {
        return dense_channel(ch, pair1, pair2, p, p_bridge);
    }
    if (mode == Mode::validate) {
        return validated_channel(ch, pair1, pair2, p, p_bridge);
    }
    return closed_channel(ch, pair1, pair2, p, p_bridge);
}

double quantify(const DensityMatrix &rho, Quantifier q) {
    switch (q) {
        case Quantifier::negativity:
            return negativity(rho);
        case Quantifier::naqc:
            return naqc_degree(rho);
        case Quantifier::tangle:
            break;
    }
    return pi_tangle(rho).pi;
}

std::function<double(double)> point_evaluator(const NetworkConfig &cfg, const ScanGrid &grid, Channel ch,
                                              Quantifier q, double eps_tilde, Mode mode) {
    return [cfg, grid, ch, q, eps_tilde, mode](double tau) {
        DipolarParams p{eps_tilde, tau};
        return quantify(channel_state(cfg, ch, p, grid.bridge_at(p), mode), q);
    };
}

std::vector<MeasureSeries> sweep(const NetworkConfig &cfg, const ScanGrid &grid, Mode mode, unsigned threads) {
    cfg.validate();
    grid.validate();
    const std::vector<double> taus = grid.taus();
    const size_t n_tau = taus.size();
    const size_t n_eps = grid.eps_values.size();

    std::vector<MeasureSeries> out;
    // (channel index, quantifier) of each series block, eps innermost.
    std::vector<std::pair<size_t, Quantifier>> blocks;
    for (size_t ci = 0; ci < grid.channels.size(); ci++) {
        for (Quantifier q : grid.quantifiers) {
            if (!compatible(grid.channels[ci], q)) {
                continue;
            }
            blocks.emplace_back(ci, q);
            for (double eps : grid.eps_values) {
                MeasureSeries s;
                s.channel = grid.channels[ci];
                s.quantifier = q;
                s.eps_tilde = eps;
                s.points.resize(n_tau);
                out.push_back(std::move(s));
            }
        }
    }

    auto work = [&](size_t item) {
        size_t ei = item / n_tau;
        size_t ti = item % n_tau;
        DipolarParams p{grid.eps_values[ei], taus[ti]};
        DipolarParams pb = grid.bridge_at(p);
        std::vector<std::optional<DensityMatrix>> states(grid.channels.size());
        for (size_t b = 0; b < blocks.size(); b++) {
            auto [ci, q] = blocks[b];
            if (!states[ci]) {
                states[ci] = channel_state(cfg, grid.channels[ci], p, pb, mode);
            }
            out[b * n_eps + ei].points[ti] = {taus[ti], quantify(*states[ci], q)};
        }
    };

    const size_t n_items = n_eps * n_tau;
    unsigned n_workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n_workers = static_cast<unsigned>(std::min<size_t>(n_workers, n_items));
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    size_t first_error_item = SIZE_MAX;
    std::mutex error_mu;
    auto worker = [&] {
        for (size_t item = next++; item < n_items; item = next++) {
            try {
                work(item);
            } catch (...) {
                // Keep the error of the earliest grid point so failures are reproducible.
                std::lock_guard lock(error_mu);
                if (item < first_error_item) {
                    first_error_item = item;
                    first_error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < n_workers; w++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
    return out;
}

namespace {

// Shrinks [alive, dead] (either order) to the zero_tol crossing.
std::pair<double, double> bisect(const std::function<double(double)> &f, double alive, double dead, double zero_tol) {
    for (int it = 0; it < kMaxRefineIterations && std::abs(dead - alive) > kRefineResolution; it++) {
        double mid = 0.5 * (alive + dead);
        if (f(mid) <= zero_tol) {
            dead = mid;
        } else {
            alive = mid;
        }
    }
    return {alive, dead};
}

}  // namespace

std::vector<EventRecord> detect_zero_intervals(const MeasureSeries &series, double zero_tol,
                                               const std::function<double(double)> &refine) {
    std::vector<EventRecord> out;
    const auto &pts = series.points;
    const size_t n = pts.size();
    for (size_t i = 0; i < n;) {
        if (pts[i].value > zero_tol) {
            i++;
            continue;
        }
        size_t s = i;
        double peak = pts[i].value;
        while (i + 1 < n && pts[i + 1].value <= zero_tol) {
            i++;
            peak = std::max(peak, pts[i].value);
        }
        size_t e = i;
        double start = pts[s].tau;
        double end = pts[e].tau;
        if (refine && s > 0) {
            start = bisect(refine, pts[s - 1].tau, start, zero_tol).second;
        }
        if (refine && e + 1 < n) {
            end = bisect(refine, pts[e + 1].tau, end, zero_tol).second;
        }
        out.push_back({EventKind::death, start, peak, end});
        if (e + 1 < n) {
            out.push_back({EventKind::birth, pts[e + 1].tau, pts[e + 1].value, std::nullopt});
        }
        i = e + 1;
    }
    return out;
}

std::vector<EventRecord> count_peaks(const MeasureSeries &series, double prominence) {
    std::vector<EventRecord> out;
    const auto &pts = series.points;
    const size_t n = pts.size();
    if (n < 3) {
        return out;
    }
    for (size_t i = 1; i + 1 < n; i++) {
        double v = pts[i].value;
        if (!(v > pts[i - 1].value)) {
            continue;
        }
        size_t j = i;
        while (j + 1 < n && pts[j + 1].value == v) {
            j++;
        }
        if (j + 1 >= n || !(pts[j + 1].value < v)) {
            i = j;
            continue;
        }
        double left_min = v;
        for (size_t k = i; k-- > 0 && pts[k].value <= v;) {
            left_min = std::min(left_min, pts[k].value);
        }
        double right_min = v;
        for (size_t k = j + 1; k < n && pts[k].value <= v; k++) {
            right_min = std::min(right_min, pts[k].value);
        }
        double prom = v - std::max(left_min, right_min);
        if (prom > 0 && prom >= prominence) {
            out.push_back({EventKind::peak, pts[i].tau, v, std::nullopt});
        }
        i = j;
    }
    return out;
}

std::vector<EventRecord> detect_sudden_changes(const MeasureSeries &series, double slope_jump_tol) {
    std::vector<EventRecord> out;
    const auto &pts = series.points;
    const size_t n = pts.size();
    if (n < 3) {
        return out;
    }
    double h = pts[1].tau - pts[0].tau;
    for (size_t i = 1; i + 1 < n; i++) {
        if (std::abs((pts[i + 1].tau - pts[i].tau) - h) > 1e-9 * std::max(1.0, std::abs(h))) {
            throw std::invalid_argument("detect_sudden_changes: tau spacing is not uniform");
        }
    }
    double range = series.max_value() - series.min_value();
    if (!(range > 0)) {
        return out;
    }
    double threshold = slope_jump_tol * range;
    // Adjacent flagged points straddle one kink; keep the strongest of each run.
    double best = 0;
    size_t best_i = 0;
    for (size_t i = 1; i + 1 < n; i++) {
        double d2 = std::abs(pts[i + 1].value - 2 * pts[i].value + pts[i - 1].value);
        if (d2 > threshold) {
            if (best == 0 || d2 > best) {
                best = d2;
                best_i = i;
            }
            continue;
        }
        if (best > 0) {
            out.push_back({EventKind::sudden_change, pts[best_i].tau, pts[best_i].value, std::nullopt});
            best = 0;
        }
    }
    if (best > 0) {
        out.push_back({EventKind::sudden_change, pts[best_i].tau, pts[best_i].value, std::nullopt});
    }
    return out;
}

double dead_measure(const std::vector<EventRecord> &events) {
    double total = 0;
    for (const auto &e : events) {
        if (e.kind == EventKind::death && e.interval_end) {
            total += *e.interval_end - e.tau;
        }
    }
    return total;
}

}  // namespace dipnet
