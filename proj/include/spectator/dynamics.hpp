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

#ifndef SPECTATOR_DYNAMICS_HPP
#define SPECTATOR_DYNAMICS_HPP

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spectator/device.hpp"
#include "spectator/labeling.hpp"
#include "spectator/propagator.hpp"
#include "spectator/schedule.hpp"
#include "spectator/static_analysis.hpp"
#include "spectator/table.hpp"

namespace spectator {

/// Qubits (fixed-frequency nodes) in 0 or 1, couplers empty, in basis order.
std::vector<Occupation> computational_labels(const DeviceGraph &device, const ModeBasis &basis);

struct EvolutionResult {
    Eigen::VectorXcd final_state;
    std::map<Occupation, double> populations;  // dressed computational states at idle
    double leakage = 0;
    std::optional<Eigen::MatrixXcd> unitary;
};

/// Piecewise-constant propagation of the schedule. An occupation label
/// starts in the idle dressed state carrying that label; results are read
/// out against idle dressed states. Requires dt <= rise / 10.
EvolutionResult evolve(const DeviceGraph &device, const FluxSchedule &schedule, const Occupation &initial, int levels,
                       double dt, bool with_unitary = false);
EvolutionResult evolve(const DeviceGraph &device, const FluxSchedule &schedule, const Eigen::VectorXcd &initial,
                       int levels, double dt, bool with_unitary = false);

/// Swap oscillation frequency of the pair at a fixed bias. The first qubit's
/// idle dressed state is released at `resonance`; the partner's idle dressed
/// population is sampled every dt up to t_max and its dominant frequency
/// returned (GHz). Throws TooWeak when the oscillation is below 1e-3.
double swap_frequency(const DeviceGraph &device, const FluxPoint &idle, const FluxPoint &resonance,
                      const LabelPair &pair, const SpectatorState &spectator, int levels, double t_max, double dt);

struct Compensation {
    std::string coupler;
    double amplitude = 0;
};

/// Repeated gate pulses with an optional synchronous compensation pulse.
struct LzExperiment {
    DeviceGraph device;
    FluxPoint idle;
    std::string gate_coupler;
    PulseShape gate_pulse;
    int n_pulses = 4;
    std::string source;
    std::string target;
    SpectatorState spectator;
    std::optional<Compensation> compensation;
    // Other gates pulsed in step with the gate pulse (parallel operation).
    std::map<std::string, PulseShape> companion_pulses;
    int levels = 3;
    double dt = 0.25;
};

/// Shares one propagator cache and the idle frame across many runs of the
/// same experiment. Thread-safe.
class LzRunner {
   public:
    explicit LzRunner(LzExperiment experiment, std::shared_ptr<Propagator> propagator = nullptr);

    const LzExperiment &experiment() const {
        return experiment_;
    }
    /// Target population after the pulse train with delay tau, using the
    /// experiment's own compensation setting.
    double transfer(double tau) const;
    /// Same, with the compensation amplitude overridden (coupler `coupler`).
    double transfer(double tau, const std::optional<Compensation> &compensation, int n_pulses) const;
    /// 2x2 idle-frame block <out|U|in> over (source, target) of one pulse.
    Eigen::Matrix2cd single_pulse_block(const std::optional<Compensation> &compensation) const;
    /// Idle dressed energies of source and target.
    std::pair<double, double> idle_energies() const;

   private:
    LzExperiment experiment_;
    std::shared_ptr<Propagator> propagator_;
    DressedBasis idle_;
    Eigen::VectorXd source_;
    Eigen::VectorXd target_;
};

/// Transfer probability versus delay; rows in the order given.
SweepTable lz_interferometry(const LzExperiment &experiment, const std::vector<double> &taus, int workers = 1);

}  // namespace spectator

#endif
