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

#ifndef SPECTATOR_HILBERT_HPP
#define SPECTATOR_HILBERT_HPP

#include <Eigen/Dense>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spectator/device.hpp"

namespace spectator {

using Occupation = std::vector<int>;

/// Truncated Fock basis. The last mode varies fastest.
class ModeBasis {
   public:
    ModeBasis() = default;
    ModeBasis(std::vector<std::string> labels, std::vector<int> levels);

    size_t dimension() const {
        return dimension_;
    }
    size_t modes() const {
        return labels_.size();
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    const std::vector<int> &levels() const {
        return levels_;
    }
    size_t stride(size_t mode) const {
        return strides_[mode];
    }
    size_t mode_index(std::string_view label) const;

    size_t index(const Occupation &occupation) const;
    Occupation occupation(size_t index) const;
    int occupation_of(size_t index, size_t mode) const {
        return static_cast<int>((index / strides_[mode]) % levels_[mode]);
    }
    int excitations(size_t index) const;

    /// Occupation with the listed modes set and all others empty.
    Occupation make(const std::map<std::string, int> &occupied) const;
    /// "0:1:0:..." in mode order.
    static std::string format(const Occupation &occupation);

    bool operator==(const ModeBasis &) const = default;

   private:
    std::vector<std::string> labels_;
    std::vector<int> levels_;
    std::vector<size_t> strides_;
    size_t dimension_ = 0;
};

/// Uses each node's own truncation when set, otherwise `levels`.
ModeBasis make_basis(const DeviceGraph &device, int levels);

/// Real symmetric matrix in GHz (h = 1). The Fock-basis Hamiltonian has no
/// imaginary entries, so complex storage is skipped.
struct HamiltonianMatrix {
    Eigen::MatrixXd matrix;
    ModeBasis basis;
    FluxPoint flux;
};

inline constexpr size_t kDefaultDimensionCap = 4096;

/// Sum of Duffing modes plus g (a+a^dag)(b+b^dag) for every listed pair;
/// counter-rotating terms kept.
HamiltonianMatrix build_hamiltonian(
    const DeviceGraph &device, const FluxPoint &flux, int levels, size_t dimension_cap = kDefaultDimensionCap);

double bare_energy(const Occupation &occupation, const DeviceGraph &device, const FluxPoint &flux);

}  // namespace spectator

#endif
