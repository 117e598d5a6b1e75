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

#ifndef SPECTATOR_GATE_HPP
#define SPECTATOR_GATE_HPP

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spectator/dynamics.hpp"
#include "spectator/labeling.hpp"
#include "spectator/propagator.hpp"
#include "spectator/schedule.hpp"
#include "spectator/static_analysis.hpp"

namespace spectator {

// Computational blocks are indexed by bit strings over an ordered qubit
// list; the first qubit is the most significant bit.

/// Bit of `qubit` (position in the list) in computational index `state`.
int qubit_bit(size_t state, size_t qubit, size_t n_qubits);

/// Diagonal phases of the product of CZ gates on the given pairs.
Eigen::VectorXd cz_phases(const std::vector<std::string> &qubits, const std::vector<LabelPair> &pairs);

struct VirtualZ {
    std::map<std::string, double> phases;  // radians, per qubit
    double global_phase = 0;
    double rms_residual = 0;  // of the single-qubit phase model, radians
};

/// Fits arg U[s,s] - target[s] = global + sum_q phase_q s_q. Single-excitation
/// states give the exact estimate; least squares on the wrapped residual
/// refines it. Throws NotPhaseLike when some |U[s,s]| < 0.5.
VirtualZ extract_virtual_z(const Eigen::MatrixXcd &block, const std::vector<std::string> &qubits,
                           const Eigen::VectorXd &target_phases = Eigen::VectorXd());

/// Row s scaled by exp(-i (global + sum_q phase_q s_q)).
Eigen::MatrixXcd apply_virtual_z(const Eigen::MatrixXcd &block, const VirtualZ &vz,
                                 const std::vector<std::string> &qubits);

/// (Tr(M^dag M) + |Tr M|^2) / (d (d + 1)) with M = target^dag actual. Equal
/// to (|Tr M|^2 + d) / (d (d + 1)) when the block is unitary; the first form
/// also charges for leakage out of the block.
double average_gate_fidelity(const Eigen::MatrixXcd &actual, const Eigen::MatrixXcd &target);

/// 1 - mean squared column norm.
double block_leakage(const Eigen::MatrixXcd &block);

/// Idle dressed computational states of `qubits` (all else empty).
std::vector<Occupation> qubit_labels(const ModeBasis &basis, const std::vector<std::string> &qubits);

/// <d_r| U |d_c> over the idle dressed computational states of `qubits`.
Eigen::MatrixXcd computational_block(Propagator &propagator, const DressedBasis &idle,
                                     const std::vector<ScheduleStep> &steps, const std::vector<std::string> &qubits);

struct GateReport {
    LabelPair pair;
    double fidelity_avg = 0;
    double spectator_ground_fidelity = 0;
    double worst_case_fidelity = 0;
    double leakage = 0;
    std::map<std::string, double> virtual_z;
    std::string conditions;
};

/// Scores a computational block against CZ on every listed pair (identity
/// elsewhere) after virtual-Z correction. The report for `pair` treats all
/// other qubits as spectators: fidelity_avg covers the whole block,
/// spectator_ground_fidelity and worst_case_fidelity the pair's 4x4 blocks
/// with the spectators frozen in |0..0> and in their worst state.
GateReport score_block(const Eigen::MatrixXcd &block, const std::vector<std::string> &qubits,
                       const std::vector<LabelPair> &cz_pairs, const LabelPair &pair);

/// Evolves the schedule and scores the pair's gate against CZ x identity on
/// the spectators. Throws DivergedGate when leakage exceeds 0.5.
GateReport gate_fidelity(const DeviceGraph &device, const FluxSchedule &schedule, const LabelPair &pair,
                         const std::vector<std::string> &spectators, int levels, double dt);
GateReport gate_fidelity(Propagator &propagator, const DressedBasis &idle, const FluxSchedule &schedule,
                         const LabelPair &pair, const std::vector<std::string> &spectators, double dt);

}  // namespace spectator

#endif
