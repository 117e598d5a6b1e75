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

#ifndef SPECTATOR_STATIC_ANALYSIS_HPP
#define SPECTATOR_STATIC_ANALYSIS_HPP

#include <Eigen/Dense>
#include <map>
#include <string>
#include <utility>

#include "spectator/device.hpp"
#include "spectator/hilbert.hpp"

namespace spectator {

using SpectatorState = std::map<std::string, int>;
using LabelPair = std::pair<std::string, std::string>;

struct FluxRange {
    double lo = 0;
    double hi = 0;
};

/// "Q4=1,Q5=0"; "none" when empty.
std::string describe(const SpectatorState &spectator);

/// Occupation with `excited` at 1, the spectators as given, all else 0.
Occupation branch_label(const ModeBasis &basis, const std::string &excited, const SpectatorState &spectator);

/// E11 - E10 - E01 + E00 over labeled eigenstates of the pair.
double static_zz(const DeviceGraph &device, const FluxPoint &flux, const LabelPair &pair, int levels);

struct EffectiveCoupling {
    double coupling = 0;  // off-diagonal of the 2x2 effective Hamiltonian, GHz
    double energy_a = 0;  // eigenvalue labeled with pair.first excited
    double energy_b = 0;
    double weight = 0;    // smallest squared singular value of the overlap block
    Eigen::Matrix2d hamiltonian = Eigen::Matrix2d::Zero();
};

/// Projects the two labeled branches onto their bare states, orthonormalizes
/// symmetrically and rotates the branch energies back into the bare frame.
/// The result is independent of eigenvector signs and of which branch got
/// which label.
EffectiveCoupling effective_coupling(const DeviceGraph &device, const FluxPoint &flux, const LabelPair &pair,
                                     const SpectatorState &spectator, int levels);

double signed_effective_coupling(const DeviceGraph &device, const FluxPoint &flux, const LabelPair &pair,
                                 const SpectatorState &spectator, int levels);

/// E(pair.first excited) - E(pair.second excited), labeled energies.
double branch_difference(const DeviceGraph &device, const FluxPoint &flux, const LabelPair &pair,
                         const SpectatorState &spectator, int levels);

struct GapResult {
    double phi_resonance = 0;
    double gap = 0;  // 2J, GHz
    SpectatorState spectator_state;
    std::string condition_label;
};

struct GapSearch {
    int scan_points = 61;
    double flux_tol = 1e-10;
};

/// Minimum splitting of the two branches while sweeping `gate_coupler`.
/// Other biases come from `base`.
GapResult exchange_gap(const DeviceGraph &device, const std::string &gate_coupler, FluxRange sweep,
                       const LabelPair &pair, const SpectatorState &spectator, int levels,
                       const FluxPoint &base = {}, const GapSearch &search = {});

struct CancellationSearch {
    // When set, J is evaluated at the branch resonance on this coupler,
    // re-located on every pass. When empty, J is taken at `base`.
    std::string gate_coupler;
    FluxRange gate_sweep;
    FluxPoint base;
    int scan_points = 61;
    int passes = 3;
    double flux_tol = 1e-9;
    GapSearch gap;
};

/// Bias of `spectator_coupler` where the signed exchange coupling vanishes.
/// Returns the first root found scanning upward through `search`.
double cancellation_bias(const DeviceGraph &device, const std::string &spectator_coupler, FluxRange search,
                         const LabelPair &pair, const SpectatorState &spectator, int levels,
                         const CancellationSearch &options = {});

}  // namespace spectator

#endif
