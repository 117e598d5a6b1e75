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

#ifndef SPECTATOR_LABELING_HPP
#define SPECTATOR_LABELING_HPP

#include <vector>

#include "spectator/eigensystem.hpp"
#include "spectator/hilbert.hpp"

namespace spectator {

inline constexpr double kDefaultOverlapFloor = 0.5;

struct LabeledEntry {
    double energy = 0;
    Occupation label;
    size_t basis_index = 0;
    size_t eigen_index = 0;
    double overlap = 0;  // squared overlap with the bare label
    bool ambiguous = false;
};

/// Eigenstates paired one-to-one with bare occupations.
class LabeledSpectrum {
   public:
    LabeledSpectrum() = default;
    LabeledSpectrum(ModeBasis basis, std::vector<LabeledEntry> entries);

    const ModeBasis &basis() const {
        return basis_;
    }
    /// Ascending energy.
    const std::vector<LabeledEntry> &entries() const {
        return entries_;
    }
    const LabeledEntry &at(const Occupation &label) const;
    const LabeledEntry &at_basis(size_t basis_index) const {
        return entries_[by_basis_[basis_index]];
    }

   private:
    ModeBasis basis_;
    std::vector<LabeledEntry> entries_;
    std::vector<size_t> by_basis_;
};

/// Global assignment maximizing the summed squared overlap, solved per
/// invariant block. Entries at or below `floor` are flagged ambiguous (a
/// 50/50 hybrid sits exactly on the default floor and counts as ambiguous).
LabeledSpectrum label_eigenstates(const Eigensystem &eig, const ModeBasis &basis, double floor = kDefaultOverlapFloor);
LabeledSpectrum label_eigenstates(const HamiltonianMatrix &h, double floor = kDefaultOverlapFloor);

/// Eigensystem plus labels at one bias; the measurement frame of dynamics.
struct DressedBasis {
    Eigensystem eigensystem;
    LabeledSpectrum spectrum;

    const ModeBasis &basis() const {
        return spectrum.basis();
    }
    Eigen::VectorXd state(const Occupation &label) const;
    double energy(const Occupation &label) const {
        return spectrum.at(label).energy;
    }
};

DressedBasis dressed_basis(const DeviceGraph &device, const FluxPoint &flux, int levels);

}  // namespace spectator

#endif
