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

#ifndef SPECTATOR_CALIBRATION_HPP
#define SPECTATOR_CALIBRATION_HPP

#include <memory>
#include <string>
#include <vector>

#include "spectator/dynamics.hpp"
#include "spectator/gate.hpp"
#include "spectator/propagator.hpp"
#include "spectator/schedule.hpp"
#include "spectator/static_analysis.hpp"
#include "spectator/table.hpp"

namespace spectator {

/// Delay maximizing the uncompensated n-pulse transfer of the runner's
/// experiment: grid over [lo, hi], then a parabola through the best sample
/// and its neighbours. Throws NothingToCalibrate when every sample is below
/// 1e-6.
double find_constructive_tau(const LzRunner &runner, FluxRange tau_range, int grid = 81, int workers = 0);

struct CompensationSetting {
    std::string coupler;
    double amplitude = 0;
    double tau_star = 0;
    double residual_transfer = 0;
    double uncompensated_transfer = 0;
    // Set when the optimum sits on the edge of the searched range; the
    // setting is still usable but the range should be widened.
    bool boundary_optimum = false;
};

/// Amplitude on `comp_coupler` minimizing the n-pulse transfer at tau_star.
/// Coarse grid, then golden-section refinement between the neighbours of
/// the best grid point down to `tol`.
CompensationSetting optimize_compensation(const LzRunner &runner, const std::string &comp_coupler, double tau_star,
                                          FluxRange amplitude_range, int grid = 41, double tol = 1e-4,
                                          int workers = 0);

/// One CZ pulse plus its synchronous compensation pulses. Compensation
/// pulses share the gate pulse's rise and hold.
struct GateSpec {
    LabelPair pair;
    std::string coupler;
    PulseShape pulse;
    std::vector<Compensation> compensations;
};

/// Single-shot schedule running every gate (and compensation) from t = 0.
/// Throws ValidationError when two entries drive the same coupler.
FluxSchedule gate_schedule(const FluxPoint &idle, const std::vector<GateSpec> &gates);

struct FidelitySweep {
    SweepTable table;  // bias, infidelity, worst_case_infidelity, leakage
    double best_bias = 0;
};

/// Infidelity of `gate` (scored over pair + spectators) while the idle bias
/// of `swept_coupler` takes each value in `biases`. best_bias is the vertex
/// of the parabola through the lowest sample and its neighbours.
FidelitySweep fidelity_sweep(const DeviceGraph &device, const FluxPoint &idle, const GateSpec &gate,
                             const std::vector<std::string> &spectators, const std::string &swept_coupler,
                             const std::vector<double> &biases, int levels, double dt, int workers = 0);

struct CzTuning {
    PulseShape pulse;
    GateReport report;
};

/// Maximizes the pair's fidelity_avg over (amplitude, hold): coarse grid,
/// then alternating golden-section passes on each parameter.
CzTuning tune_cz(const DeviceGraph &device, const FluxPoint &idle, const GateSpec &gate,
                 const std::vector<std::string> &spectators, FluxRange amplitude_range, FluxRange hold_range,
                 int levels, double dt, int grid = 7, int passes = 2, int workers = 0);

/// Runs all gates in one evolution. Each report scores its pair with every
/// other gate qubit as a spectator; fidelity_avg is the pair fidelity with
/// the spectators in |0..0>, worst_case_fidelity the minimum over their
/// computational states. A null propagator gets a private one.
std::vector<GateReport> parallel_gate_report(const DeviceGraph &device, const FluxPoint &idle,
                                             const std::vector<GateSpec> &gates, int levels, double dt,
                                             std::shared_ptr<Propagator> propagator = nullptr);

}  // namespace spectator

#endif
