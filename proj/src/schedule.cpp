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

#include "spectator/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectator/errors.hpp"

namespace spectator {

double PulseShape::ramp(double x) const {
    if (rise <= 0) {
        return amplitude;
    }
    return 0.5 * amplitude * (1 - std::cos(std::numbers::pi * x / rise));
}

double PulseShape::envelope(double t) const {
    if (t < 0 || t > duration()) {
        return 0;
    }
    if (t < rise) {
        return ramp(t);
    }
    if (t <= rise + hold) {
        return amplitude;
    }
    return ramp(duration() - t);
}

void FluxSchedule::validate(const DeviceGraph &device) const {
    check_flux(device, idle);
    if (!(duration >= 0) || !std::isfinite(duration)) {
        throw ValidationError("schedule duration must be finite and >= 0");
    }
    for (const auto &[label, pulses] : tracks) {
        if (!device.contains(label) || !device.node(label).tunable) {
            throw ValidationError("schedule track '" + label + "' is not a tunable node");
        }
        std::vector<PulseInstance> sorted = pulses;
        std::sort(sorted.begin(), sorted.end(),
                  [](const PulseInstance &a, const PulseInstance &b) { return a.start < b.start; });
        for (size_t k = 0; k < sorted.size(); k++) {
            const auto &p = sorted[k];
            if (!(p.shape.rise >= 0) || !(p.shape.hold >= 0) || !std::isfinite(p.shape.amplitude)) {
                throw ValidationError("track '" + label + "': pulse needs rise >= 0, hold >= 0, finite amplitude");
            }
            if (p.start < 0 || p.start + p.shape.duration() > duration + 1e-9) {
                throw ValidationError("track '" + label + "': pulse at " + std::to_string(p.start) +
                                      " ns does not fit in the schedule");
            }
            if (k > 0 && sorted[k - 1].start + sorted[k - 1].shape.duration() > p.start + 1e-9) {
                throw ValidationError("track '" + label + "': overlapping pulses");
            }
        }
    }
}

FluxPoint FluxSchedule::flux_at(double t) const {
    FluxPoint out = idle;
    for (const auto &[label, pulses] : tracks) {
        double offset = 0;
        for (const auto &p : pulses) {
            offset += p.shape.envelope(t - p.start);
        }
        out.biases[label] = idle.at(label) + offset;
    }
    return out;
}

FluxSchedule pulse_train(const FluxPoint &idle, const std::map<std::string, PulseShape> &pulses, int n_pulses,
                         double tau) {
    if (n_pulses < 1) {
        throw ValidationError("pulse train needs at least one pulse");
    }
    if (!(tau >= 0)) {
        throw ValidationError("pulse delay must be >= 0");
    }
    double length = 0;
    for (const auto &[label, shape] : pulses) {
        length = std::max(length, shape.duration());
    }
    FluxSchedule out;
    out.idle = idle;
    for (int k = 0; k < n_pulses; k++) {
        double start = k * (length + tau);
        for (const auto &[label, shape] : pulses) {
            out.tracks[label].push_back(PulseInstance{start, shape});
        }
    }
    out.duration = n_pulses * length + (n_pulses - 1) * tau;
    return out;
}

namespace {

enum class Phase { idle, rising, holding, falling };

struct Active {
    const std::string *label;
    const PulseInstance *pulse;
    Phase phase;
};

// Corner times, computed one way everywhere so cuts and offsets agree bitwise.
double top_start(const PulseInstance &p) {
    return p.start + p.shape.rise;
}
double top_end(const PulseInstance &p) {
    return p.start + (p.shape.rise + p.shape.hold);
}
double pulse_end(const PulseInstance &p) {
    return p.start + p.shape.duration();
}

Phase phase_at(const PulseInstance &p, double t) {
    if (t < p.start || t > pulse_end(p)) {
        return Phase::idle;
    }
    if (t < top_start(p)) {
        return Phase::rising;
    }
    if (t < top_end(p)) {
        return Phase::holding;
    }
    return Phase::falling;
}

}  // namespace

std::vector<ScheduleStep> discretize(const FluxSchedule &schedule, double dt) {
    if (!(dt > 0)) {
        throw ValidationError("time step must be > 0");
    }
    std::vector<double> cuts{0.0, schedule.duration};
    for (const auto &[label, pulses] : schedule.tracks) {
        for (const auto &p : pulses) {
            for (double c : {p.start, top_start(p), top_end(p), pulse_end(p)}) {
                if (c > 0 && c < schedule.duration) {
                    cuts.push_back(c);
                }
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<ScheduleStep> steps;
    for (size_t k = 0; k + 1 < cuts.size(); k++) {
        double a = cuts[k];
        double b = cuts[k + 1];
        if (!(b > a)) {
            continue;
        }
        double mid = 0.5 * (a + b);
        std::vector<Active> active;
        bool ramping = false;
        for (const auto &[label, pulses] : schedule.tracks) {
            for (const auto &p : pulses) {
                Phase ph = phase_at(p, mid);
                if (ph != Phase::idle) {
                    active.push_back(Active{&label, &p, ph});
                    ramping = ramping || ph == Phase::rising || ph == Phase::falling;
                }
            }
        }
        if (!ramping) {
            FluxPoint flux = schedule.idle;
            for (const auto &act : active) {
                flux.biases[*act.label] = schedule.idle.at(*act.label) + act.pulse->shape.amplitude;
            }
            steps.push_back(ScheduleStep{std::move(flux), b - a});
            continue;
        }
        // A segment covering a whole ramp uses the ramp's own length, so
        // repeated pulses do not pick up start-dependent rounding.
        double span = b - a;
        for (const auto &act : active) {
            double r = act.pulse->shape.rise;
            if ((act.phase == Phase::rising || act.phase == Phase::falling) && std::abs(span - r) <= 1e-9 * (1 + r)) {
                span = r;
            }
        }
        auto m = static_cast<long>(std::ceil(span / dt - 1e-9));
        m = std::max(m, 1L);
        double h = span / static_cast<double>(m);
        for (long j = 0; j < m; j++) {
            FluxPoint flux = schedule.idle;
            for (const auto &act : active) {
                const PulseInstance &p = *act.pulse;
                double value = p.shape.amplitude;
                bool whole_ramp = std::abs((b - a) - p.shape.rise) <= 1e-9 * (1 + p.shape.rise);
                if (act.phase == Phase::rising) {
                    double offset = whole_ramp ? 0.0 : a - p.start;
                    value = p.shape.ramp(offset + (static_cast<double>(j) + 0.5) * h);
                } else if (act.phase == Phase::falling) {
                    double offset = whole_ramp ? 0.0 : pulse_end(p) - b;
                    value = p.shape.ramp(offset + (static_cast<double>(m - 1 - j) + 0.5) * h);
                }
                flux.biases[*act.label] = schedule.idle.at(*act.label) + value;
            }
            steps.push_back(ScheduleStep{std::move(flux), h});
        }
    }
    return steps;
}

std::vector<ScheduleStep> discretize_checked(const FluxSchedule &schedule, const DeviceGraph &device, double dt) {
    schedule.validate(device);
    for (const auto &[label, pulses] : schedule.tracks) {
        for (const auto &p : pulses) {
            if (p.shape.rise > 0 && dt > p.shape.rise / 10 + 1e-12) {
                throw ValidationError("time step " + std::to_string(dt) + " ns does not resolve the " +
                                      std::to_string(p.shape.rise) + " ns ramp on '" + label +
                                      "' (need dt <= rise/10)");
            }
        }
    }
    return discretize(schedule, dt);
}

}  // namespace spectator
