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

#include "spectator/dynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "spectator/errors.hpp"
#include "spectator/parallel.hpp"
#include "spectator/spectrum.hpp"

namespace spectator {

std::vector<Occupation> computational_labels(const DeviceGraph &device, const ModeBasis &basis) {
    std::vector<Occupation> out;
    for (size_t s = 0; s < basis.dimension(); s++) {
        bool ok = true;
        for (size_t k = 0; k < basis.modes() && ok; k++) {
            int n = basis.occupation_of(s, k);
            ok = device.nodes()[k].tunable ? n == 0 : n <= 1;
        }
        if (ok) {
            out.push_back(basis.occupation(s));
        }
    }
    return out;
}

namespace {

EvolutionResult run_evolution(const DeviceGraph &device, const FluxSchedule &schedule, const DressedBasis &idle,
                              const Eigen::VectorXcd &initial, int levels, double dt, bool with_unitary) {
    const ModeBasis &basis = idle.basis();
    if (static_cast<size_t>(initial.size()) != basis.dimension()) {
        throw ValidationError("initial state has the wrong dimension");
    }
    std::vector<ScheduleStep> steps = discretize_checked(schedule, device, dt);
    Propagator prop(device, levels);

    EvolutionResult result;
    Eigen::MatrixXcd psi = initial;
    prop.run(steps, psi);
    result.final_state = psi.col(0);

    double total = 0;
    for (const auto &label : computational_labels(device, basis)) {
        Eigen::VectorXd v = idle.state(label);
        double p = std::norm(v.cast<std::complex<double>>().dot(result.final_state));
        result.populations[label] = p;
        total += p;
    }
    result.leakage = result.final_state.squaredNorm() - total;
    if (with_unitary) {
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(basis.dimension()),
                                                        static_cast<Eigen::Index>(basis.dimension()));
        prop.run(steps, u);
        result.unitary = std::move(u);
    }
    return result;
}

}  // namespace

EvolutionResult evolve(const DeviceGraph &device, const FluxSchedule &schedule, const Occupation &initial, int levels,
                       double dt, bool with_unitary) {
    DressedBasis idle = dressed_basis(device, schedule.idle, levels);
    const LabeledEntry &entry = idle.spectrum.at(initial);
    if (entry.ambiguous) {
        throw AmbiguousLabel("initial label " + ModeBasis::format(initial) + " is ambiguous at the idle bias");
    }
    Eigen::VectorXcd psi = idle.state(initial).cast<std::complex<double>>();
    return run_evolution(device, schedule, idle, psi, levels, dt, with_unitary);
}

EvolutionResult evolve(const DeviceGraph &device, const FluxSchedule &schedule, const Eigen::VectorXcd &initial,
                       int levels, double dt, bool with_unitary) {
    DressedBasis idle = dressed_basis(device, schedule.idle, levels);
    return run_evolution(device, schedule, idle, initial, levels, dt, with_unitary);
}

double swap_frequency(const DeviceGraph &device, const FluxPoint &idle, const FluxPoint &resonance,
                      const LabelPair &pair, const SpectatorState &spectator, int levels, double t_max, double dt) {
    if (!(dt > 0) || !(t_max > 8 * dt)) {
        throw ValidationError("swap_frequency: need dt > 0 and t_max > 8 dt");
    }
    DressedBasis frame = dressed_basis(device, idle, levels);
    Eigen::VectorXd start = frame.state(branch_label(frame.basis(), pair.first, spectator));
    Eigen::VectorXd partner = frame.state(branch_label(frame.basis(), pair.second, spectator));
    Eigensystem eig = diagonalize(build_hamiltonian(device, resonance, levels));

    // <partner| exp(-2 pi i H t) |start> = sum_k w_k exp(-2 pi i E_k t)
    std::vector<double> energy;
    std::vector<double> weight;
    for (size_t k = 0; k < eig.dimension(); k++) {
        Eigen::VectorXd v = eig.vector(k);
        double w = v.dot(partner) * v.dot(start);
        if (std::abs(w) > 1e-15) {
            energy.push_back(eig.values()[static_cast<Eigen::Index>(k)]);
            weight.push_back(w);
        }
    }
    auto samples = static_cast<size_t>(std::floor(t_max / dt)) + 1;
    std::vector<double> trace(samples);
    for (size_t j = 0; j < samples; j++) {
        double t = static_cast<double>(j) * dt;
        std::complex<double> amp = 0;
        for (size_t k = 0; k < energy.size(); k++) {
            amp += weight[k] * std::polar(1.0, -2 * std::numbers::pi * energy[k] * t);
        }
        trace[j] = std::norm(amp);
    }
    PeakEstimate peak = dominant_frequency(trace, dt);
    if (peak.peak_to_peak < 1e-3) {
        throw TooWeak("swap between " + pair.first + " and " + pair.second + " oscillates by only " +
                      std::to_string(peak.peak_to_peak) + " in population");
    }
    return peak.frequency;
}

LzRunner::LzRunner(LzExperiment experiment, std::shared_ptr<Propagator> propagator)
    : experiment_(std::move(experiment)),
      propagator_(propagator ? std::move(propagator)
                             : std::make_shared<Propagator>(experiment_.device, experiment_.levels)),
      idle_(dressed_basis(experiment_.device, experiment_.idle, experiment_.levels)) {
    if (experiment_.n_pulses < 1) {
        throw ValidationError("LZ experiment needs at least one pulse");
    }
    if (!experiment_.device.node(experiment_.gate_coupler).tunable) {
        throw ValidationError("gate coupler '" + experiment_.gate_coupler + "' is not tunable");
    }
    source_ = idle_.state(branch_label(idle_.basis(), experiment_.source, experiment_.spectator));
    target_ = idle_.state(branch_label(idle_.basis(), experiment_.target, experiment_.spectator));
}

namespace {

std::vector<ScheduleStep> train_steps(const LzExperiment &e, double tau, const std::optional<Compensation> &comp,
                                      int n_pulses) {
    std::map<std::string, PulseShape> pulses{{e.gate_coupler, e.gate_pulse}};
    for (const auto &[coupler, shape] : e.companion_pulses) {
        if (!pulses.emplace(coupler, shape).second) {
            throw ValidationError("companion pulse on the gate coupler '" + coupler + "'");
        }
    }
    if (comp) {
        if (pulses.count(comp->coupler)) {
            throw ValidationError("compensation coupler '" + comp->coupler + "' already carries a pulse");
        }
        pulses[comp->coupler] = PulseShape{comp->amplitude, e.gate_pulse.rise, e.gate_pulse.hold};
    }
    FluxSchedule schedule = pulse_train(e.idle, pulses, n_pulses, tau);
    return discretize_checked(schedule, e.device, e.dt);
}

}  // namespace

double LzRunner::transfer(double tau) const {
    return transfer(tau, experiment_.compensation, experiment_.n_pulses);
}

double LzRunner::transfer(double tau, const std::optional<Compensation> &compensation, int n_pulses) const {
    std::vector<ScheduleStep> steps = train_steps(experiment_, tau, compensation, n_pulses);
    Eigen::MatrixXcd psi = source_.cast<std::complex<double>>();
    propagator_->run(steps, psi);
    return std::norm(target_.cast<std::complex<double>>().dot(psi.col(0)));
}

Eigen::Matrix2cd LzRunner::single_pulse_block(const std::optional<Compensation> &compensation) const {
    std::vector<ScheduleStep> steps = train_steps(experiment_, 0.0, compensation, 1);
    Eigen::MatrixXcd psi(source_.size(), 2);
    psi.col(0) = source_.cast<std::complex<double>>();
    psi.col(1) = target_.cast<std::complex<double>>();
    propagator_->run(steps, psi);
    Eigen::Matrix2cd out;
    for (int c = 0; c < 2; c++) {
        out(0, c) = source_.cast<std::complex<double>>().dot(psi.col(c));
        out(1, c) = target_.cast<std::complex<double>>().dot(psi.col(c));
    }
    return out;
}

std::pair<double, double> LzRunner::idle_energies() const {
    return {idle_.energy(branch_label(idle_.basis(), experiment_.source, experiment_.spectator)),
            idle_.energy(branch_label(idle_.basis(), experiment_.target, experiment_.spectator))};
}

SweepTable lz_interferometry(const LzExperiment &experiment, const std::vector<double> &taus, int workers) {
    LzRunner runner(experiment);
    std::vector<double> probs = parallel_map(taus.size(), workers, [&](size_t k) { return runner.transfer(taus[k]); });
    SweepTable table;
    table.columns = {"tau_ns", "transfer_prob"};
    for (size_t k = 0; k < taus.size(); k++) {
        table.add_row({taus[k], probs[k]});
    }
    return table;
}

}  // namespace spectator
