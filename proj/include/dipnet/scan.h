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


#ifndef DIPNET_SCAN_H
#define DIPNET_SCAN_H

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "dipnet/channel.h"
#include "dipnet/netmodel.h"

namespace dipnet {

enum class Quantifier { negativity, naqc, tangle };

std::string_view to_string(Quantifier q);
/// Throws std::invalid_argument for unknown names.
Quantifier quantifier_from_string(std::string_view name);

/// Tangle needs three nodes; negativity and NAQC need two.
bool compatible(Channel ch, Quantifier q);

enum class Mode { closed_form, dense, validate };

std::string_view to_string(Mode m);
Mode mode_from_string(std::string_view name);

inline constexpr double kDefaultZeroTol = 1e-6;
inline constexpr double kDefaultProminenceFrac = 0.05;
inline constexpr double kDefaultSlopeJumpTol = 0.01;
inline constexpr double kRefineResolution = 1e-4;
inline constexpr int kMaxRefineIterations = 40;

struct ScanGrid {
    double tau_min = 0;
    double tau_max = 10;
    size_t tau_steps = 1001;
    std::vector<double> eps_values{-0.2, 0, 0.1, 0.3};
    std::vector<Channel> channels{Channel::C12};
    std::vector<Quantifier> quantifiers{Quantifier::negativity};
    /// Bridge interaction for C18. Unset fields follow the swept grid point.
    std::optional<double> bridge_tau;
    std::optional<double> bridge_eps;

    /// Throws std::invalid_argument on a broken invariant.
    void validate() const;
    /// tau_steps points, both ends included.
    std::vector<double> taus() const;
    DipolarParams bridge_at(const DipolarParams &p) const;
};

struct SeriesPoint {
    double tau = 0;
    double value = 0;
};

struct MeasureSeries {
    Channel channel = Channel::C12;
    Quantifier quantifier = Quantifier::negativity;
    double eps_tilde = 0;
    std::vector<SeriesPoint> points;

    double min_value() const;
    double max_value() const;
};

enum class EventKind { death, birth, peak, sudden_change };

std::string_view to_string(EventKind k);

struct EventRecord {
    EventKind kind = EventKind::death;
    double tau = 0;
    double value = 0;
    /// Only set for death intervals.
    std::optional<double> interval_end;
};

/// Reduced state of `ch` at one parameter point, following `mode`.
DensityMatrix channel_state(const NetworkConfig &cfg, Channel ch, const DipolarParams &p,
                            const DipolarParams &p_bridge, Mode mode);

/// Scalar quantifier of a reduced state.
double quantify(const DensityMatrix &rho, Quantifier q);

/// tau -> quantifier value at fixed (channel, quantifier, eps_tilde).
std::function<double(double)> point_evaluator(const NetworkConfig &cfg, const ScanGrid &grid, Channel ch,
                                              Quantifier q, double eps_tilde, Mode mode);

/// One series per (channel, quantifier, eps) in that nesting order. Grid points
/// are evaluated on `threads` workers (0 picks the hardware count); the result
/// does not depend on the worker count.
std::vector<MeasureSeries> sweep(const NetworkConfig &cfg, const ScanGrid &grid, Mode mode, unsigned threads = 0);

/// Death intervals (runs with value <= zero_tol) and the births that end them.
/// When `refine` is given, interval endpoints are bisected on it.
std::vector<EventRecord> detect_zero_intervals(const MeasureSeries &series, double zero_tol,
                                               const std::function<double(double)> &refine = {});

/// Local maxima whose topographic prominence reaches `prominence`.
std::vector<EventRecord> count_peaks(const MeasureSeries &series, double prominence);

/// Points whose second difference exceeds slope_jump_tol * (max - min).
/// Throws std::invalid_argument unless the tau spacing is uniform.
std::vector<EventRecord> detect_sudden_changes(const MeasureSeries &series, double slope_jump_tol);

/// Total tau length covered by death intervals.
double dead_measure(const std::vector<EventRecord> &events);

}  // namespace dipnet

#endif
