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

#include "spectator/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "spectator/errors.hpp"
#include "spectator/optimize.hpp"
#include "spectator/parallel.hpp"

namespace spectator {

namespace {

void check_range(FluxRange range, int grid, const char *what) {
    if (!(range.hi > range.lo) || !std::isfinite(range.lo) || !std::isfinite(range.hi)) {
        throw ValidationError(std::string(what) + " range is empty");
    }
    if (grid < 3) {
        throw ValidationError(std::string(what) + " grid needs at least 3 points");
    }
}

}  // namespace

double find_constructive_tau(const LzRunner &runner, FluxRange tau_range, int grid, int workers) {
    check_range(tau_range, grid, "delay");
    if (tau_range.lo < 0) {
        throw ValidationError("delay range must be non-negative");
    }
    const LzExperiment &e = runner.experiment();
    std::vector<double> taus = linspace(tau_range.lo, tau_range.hi, grid);
    std::vector<double> p = parallel_map(taus.size(), workers, [&](size_t k) {
        return runner.transfer(taus[k], std::nullopt, e.n_pulses);
    });
    auto best = static_cast<size_t>(std::max_element(p.begin(), p.end()) - p.begin());
    if (p[best] < 1e-6) {
        throw NothingToCalibrate("transfer stays below 1e-6 over the delay range (peak " + format_float(p[best]) +
                                 "); the exchange is already cancelled");
    }
    if (best == 0 || best + 1 == taus.size()) {
        return taus[best];
    }
    double step = taus[1] - taus[0];
    return parabolic_vertex(taus[best], step, p[best - 1], p[best], p[best + 1]);
}

CompensationSetting optimize_compensation(const LzRunner &runner, const std::string &comp_coupler, double tau_star,
                                          FluxRange amplitude_range, int grid, double tol, int workers) {
    check_range(amplitude_range, grid, "amplitude");
    const LzExperiment &e = runner.experiment();
    if (!e.device.contains(comp_coupler) || !e.device.node(comp_coupler).tunable) {
        throw ValidationError("compensation coupler '" + comp_coupler + "' is not a tunable node");
    }
    auto transfer_at = [&](double amp) {
        return runner.transfer(tau_star, Compensation{comp_coupler, amp}, e.n_pulses);
    };
    std::vector<double> amps = linspace(amplitude_range.lo, amplitude_range.hi, grid);
    std::vector<double> p = parallel_map(amps.size(), workers, [&](size_t k) { return transfer_at(amps[k]); });
    auto best = static_cast<size_t>(std::min_element(p.begin(), p.end()) - p.begin());

    double lo = amps[best == 0 ? 0 : best - 1];
    double hi = amps[std::min(best + 1, amps.size() - 1)];
    ScalarMinimum refined = golden_section_minimize(transfer_at, lo, hi, tol);

    CompensationSetting out;
    out.coupler = comp_coupler;
    out.tau_star = tau_star;
    if (refined.value <= p[best]) {
        out.amplitude = refined.x;
        out.residual_transfer = refined.value;
    } else {
        out.amplitude = amps[best];
        out.residual_transfer = p[best];
    }
    out.uncompensated_transfer = runner.transfer(tau_star, std::nullopt, e.n_pulses);
    out.boundary_optimum = out.amplitude - amplitude_range.lo < tol || amplitude_range.hi - out.amplitude < tol;
    return out;
}

FluxSchedule gate_schedule(const FluxPoint &idle, const std::vector<GateSpec> &gates) {
    if (gates.empty()) {
        throw ValidationError("no gates given");
    }
    FluxSchedule schedule;
    schedule.idle = idle;
    auto claim = [&](const std::string &coupler, const PulseShape &shape) {
        if (schedule.tracks.count(coupler)) {
            throw ValidationError("coupler '" + coupler + "' is driven by more than one pulse");
        }
        schedule.tracks[coupler] = {PulseInstance{0.0, shape}};
        schedule.duration = std::max(schedule.duration, shape.duration());
    };
    for (const auto &g : gates) {
        claim(g.coupler, g.pulse);
        for (const auto &c : g.compensations) {
            claim(c.coupler, PulseShape{c.amplitude, g.pulse.rise, g.pulse.hold});
        }
    }
    return schedule;
}

FidelitySweep fidelity_sweep(const DeviceGraph &device, const FluxPoint &idle, const GateSpec &gate,
                             const std::vector<std::string> &spectators, const std::string &swept_coupler,
                             const std::vector<double> &biases, int levels, double dt, int workers) {
    if (biases.size() < 3) {
        throw ValidationError("fidelity sweep needs at least 3 bias points");
    }
    if (!device.node(swept_coupler).tunable) {
        throw ValidationError("swept node '" + swept_coupler + "' is not tunable");
    }
    std::vector<GateReport> reports = parallel_map(biases.size(), workers, [&](size_t k) {
        FluxPoint at = idle.with(swept_coupler, biases[k]);
        return gate_fidelity(device, gate_schedule(at, {gate}), gate.pair, spectators, levels, dt);
    });
    FidelitySweep out;
    out.table.columns = {"bias", "infidelity", "worst_case_infidelity", "leakage"};
    std::vector<double> err;
    for (size_t k = 0; k < biases.size(); k++) {
        const GateReport &r = reports[k];
        err.push_back(1 - r.fidelity_avg);
        out.table.add_row({biases[k], 1 - r.fidelity_avg, 1 - r.worst_case_fidelity, r.leakage});
    }
    auto best = static_cast<size_t>(std::min_element(err.begin(), err.end()) - err.begin());
    size_t mid = std::clamp<size_t>(best, 1, biases.size() - 2);
    double step = biases[mid + 1] - biases[mid];
    out.best_bias = parabolic_vertex(biases[mid], step, err[mid - 1], err[mid], err[mid + 1]);
    return out;
}

CzTuning tune_cz(const DeviceGraph &device, const FluxPoint &idle, const GateSpec &gate,
                 const std::vector<std::string> &spectators, FluxRange amplitude_range, FluxRange hold_range,
                 int levels, double dt, int grid, int passes, int workers) {
    check_range(amplitude_range, grid, "amplitude");
    if (hold_range.lo < 0 || hold_range.hi < hold_range.lo) {
        throw ValidationError("hold range must be non-negative and ordered");
    }
    auto propagator = std::make_shared<Propagator>(device, levels);
    DressedBasis frame = dressed_basis(device, idle, levels);
    auto infidelity = [&](double amp, double hold) {
        GateSpec trial = gate;
        trial.pulse.amplitude = amp;
        trial.pulse.hold = hold;
        try {
            return 1 - gate_fidelity(*propagator, frame, gate_schedule(idle, {trial}), gate.pair, spectators, dt)
                           .fidelity_avg;
        } catch (const PhysicsError &) {
            // Far from a CZ (diverged or not diagonal); worst possible score.
            return 1.0;
        }
    };
    std::vector<double> amps = linspace(amplitude_range.lo, amplitude_range.hi, grid);
    std::vector<double> holds =
        hold_range.hi > hold_range.lo ? linspace(hold_range.lo, hold_range.hi, grid) : std::vector<double>{hold_range.lo};
    std::vector<double> err = parallel_map(amps.size() * holds.size(), workers, [&](size_t k) {
        return infidelity(amps[k / holds.size()], holds[k % holds.size()]);
    });
    auto best = static_cast<size_t>(std::min_element(err.begin(), err.end()) - err.begin());
    double amp = amps[best / holds.size()];
    double hold = holds[best % holds.size()];
    double value = err[best];
    double amp_step = amps[1] - amps[0];
    double hold_step = holds.size() > 1 ? holds[1] - holds[0] : 0;
    for (int pass = 0; pass < passes; pass++) {
        ScalarMinimum a = golden_section_minimize([&](double x) { return infidelity(x, hold); },
                                                  std::max(amplitude_range.lo, amp - amp_step),
                                                  std::min(amplitude_range.hi, amp + amp_step), 1e-6);
        if (a.value < value) {
            amp = a.x;
            value = a.value;
        }
        if (hold_step > 0) {
            ScalarMinimum h = golden_section_minimize([&](double x) { return infidelity(amp, x); },
                                                      std::max(hold_range.lo, hold - hold_step),
                                                      std::min(hold_range.hi, hold + hold_step), 1e-3);
            if (h.value < value) {
                hold = h.x;
                value = h.value;
            }
        }
        amp_step /= 4;
        hold_step /= 4;
    }
    CzTuning out;
    out.pulse = gate.pulse;
    out.pulse.amplitude = amp;
    out.pulse.hold = hold;
    GateSpec tuned = gate;
    tuned.pulse = out.pulse;
    out.report = gate_fidelity(*propagator, frame, gate_schedule(idle, {tuned}), gate.pair, spectators, dt);
    return out;
}

std::vector<GateReport> parallel_gate_report(const DeviceGraph &device, const FluxPoint &idle,
                                             const std::vector<GateSpec> &gates, int levels, double dt,
                                             std::shared_ptr<Propagator> propagator) {
    FluxSchedule schedule = gate_schedule(idle, gates);
    std::set<std::string> wanted;
    std::vector<LabelPair> pairs;
    for (const auto &g : gates) {
        for (const auto &q : {g.pair.first, g.pair.second}) {
            if (!wanted.insert(q).second) {
                throw ValidationError("qubit '" + q + "' belongs to more than one gate");
            }
        }
        pairs.push_back(g.pair);
    }
    std::vector<std::string> qubits;
    for (const auto &n : device.nodes()) {
        if (wanted.count(n.label)) {
            if (n.tunable) {
                throw ValidationError("'" + n.label + "' is a coupler and cannot be a gate qubit");
            }
            qubits.push_back(n.label);
        }
    }
    if (qubits.size() != wanted.size()) {
        for (const auto &q : wanted) {
            device.index_of(q);
        }
    }
    if (!propagator) {
        propagator = std::make_shared<Propagator>(device, levels);
    }
    DressedBasis frame = dressed_basis(device, idle, levels);
    std::vector<ScheduleStep> steps = discretize_checked(schedule, device, dt);
    Eigen::MatrixXcd block = computational_block(*propagator, frame, steps, qubits);
    std::vector<GateReport> out;
    for (const auto &g : gates) {
        GateReport r = score_block(block, qubits, pairs, g.pair);
        r.fidelity_avg = r.spectator_ground_fidelity;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace spectator
