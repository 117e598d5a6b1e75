// Copyright 2026 The spectator Authors
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

#ifndef SPECTATOR_SCHEDULE_HPP
#define SPECTATOR_SCHEDULE_HPP

#include <map>
#include <string>
#include <vector>

#include "spectator/device.hpp"

namespace spectator {

/// Flat top with raised-cosine ramps. Amplitude is the peak offset from the
/// idle bias in flux quanta; times in ns.
struct PulseShape {
    double amplitude = 0;
    double rise = 10;
    double hold = 0;

    double duration() const {
        return 2 * rise + hold;
    }
    /// Ramp value a distance x (0..rise) from the pulse edge.
    double ramp(double x) const;
    /// Offset at time t after the pulse start; zero outside the pulse.
    double envelope(double t) const;

    bool operator==(const PulseShape &) const = default;
};

struct PulseInstance {
    double start = 0;
    PulseShape shape;
};

struct FluxSchedule {
    FluxPoint idle;
    std::map<std::string, std::vector<PulseInstance>> tracks;
    double duration = 0;

    /// Tracks on tunable nodes, pulses inside [0, duration], no overlap.
    void validate(const DeviceGraph &device) const;
    FluxPoint flux_at(double t) const;
};

/// `n_pulses` repetitions of simultaneous pulses (one per listed coupler),
/// separated by `tau` ns of idle time.
FluxSchedule pulse_train(const FluxPoint &idle, const std::map<std::string, PulseShape> &pulses, int n_pulses,
                         double tau);

/// One piecewise-constant propagation step.
struct ScheduleStep {
    FluxPoint flux;
    double length = 0;
};

/// Splits the schedule at every pulse corner. Stretches where every track is
/// idle or holding become single exact steps. Ramps are cut into equal
/// substeps of at most dt, each evaluated at its midpoint. Offsets are taken
/// from the nearest pulse edge, so identical pulses (and the rising and
/// falling halves of one pulse) produce bit-identical flux values.
std::vector<ScheduleStep> discretize(const FluxSchedule &schedule, double dt);

/// Same stepping, validated against the device and the ramp-resolution
/// precondition dt <= rise / 10.
std::vector<ScheduleStep> discretize_checked(const FluxSchedule &schedule, const DeviceGraph &device, double dt);

}  // namespace spectator

#endif
