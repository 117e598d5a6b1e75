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

#include "spectator/hilbert.hpp"

#include <cmath>

#include "spectator/errors.hpp"

namespace spectator {

ModeBasis::ModeBasis(std::vector<std::string> labels, std::vector<int> levels)
    : labels_(std::move(labels)), levels_(std::move(levels)) {
    if (labels_.size() != levels_.size()) {
        throw ValidationError("basis: one truncation per mode required");
    }
    strides_.assign(levels_.size(), 1);
    dimension_ = 1;
    for (size_t k = levels_.size(); k-- > 0;) {
        if (levels_[k] < 2) {
            throw ValidationError("basis: mode '" + labels_[k] + "' needs at least 2 levels");
        }
        strides_[k] = dimension_;
        dimension_ *= static_cast<size_t>(levels_[k]);
    }
}

size_t ModeBasis::mode_index(std::string_view label) const {
    for (size_t k = 0; k < labels_.size(); k++) {
        if (labels_[k] == label) {
            return k;
        }
    }
    throw ValidationError("basis has no mode '" + std::string(label) + "'");
}

size_t ModeBasis::index(const Occupation &occupation) const {
    if (occupation.size() != levels_.size()) {
        throw ValidationError("occupation has " + std::to_string(occupation.size()) + " entries, basis has " +
                              std::to_string(levels_.size()) + " modes");
    }
    size_t out = 0;
    for (size_t k = 0; k < levels_.size(); k++) {
        if (occupation[k] < 0 || occupation[k] >= levels_[k]) {
            throw ValidationError("occupation " + format(occupation) + " outside truncation of mode '" +
                                  labels_[k] + "'");
        }
        out += static_cast<size_t>(occupation[k]) * strides_[k];
    }
    return out;
}

Occupation ModeBasis::occupation(size_t index) const {
    Occupation out(levels_.size());
    for (size_t k = 0; k < levels_.size(); k++) {
        out[k] = occupation_of(index, k);
    }
    return out;
}

int ModeBasis::excitations(size_t index) const {
    int total = 0;
    for (size_t k = 0; k < levels_.size(); k++) {
        total += occupation_of(index, k);
    }
    return total;
}

Occupation ModeBasis::make(const std::map<std::string, int> &occupied) const {
    Occupation out(levels_.size(), 0);
    for (const auto &[label, n] : occupied) {
        out[mode_index(label)] = n;
    }
    return out;
}

std::string ModeBasis::format(const Occupation &occupation) {
    std::string out;
    for (size_t k = 0; k < occupation.size(); k++) {
        if (k) {
            out += ':';
        }
        out += std::to_string(occupation[k]);
    }
    return out;
}

ModeBasis make_basis(const DeviceGraph &device, int levels) {
    std::vector<std::string> labels;
    std::vector<int> per_mode;
    for (const auto &n : device.nodes()) {
        labels.push_back(n.label);
        per_mode.push_back(n.levels ? n.levels : levels);
    }
    return ModeBasis(std::move(labels), std::move(per_mode));
}

HamiltonianMatrix build_hamiltonian(const DeviceGraph &device, const FluxPoint &flux, int levels, size_t dimension_cap) {
    if (levels < 2) {
        throw ValidationError("levels must be >= 2");
    }
    check_flux(device, flux);
    ModeBasis basis = make_basis(device, levels);
    size_t dim = basis.dimension();
    if (dim > dimension_cap) {
        throw ValidationError("Hilbert space dimension " + std::to_string(dim) + " exceeds the cap of " +
                              std::to_string(dimension_cap) + "; simulate a subgraph or lower the truncation");
    }

    size_t n_modes = device.size();
    std::vector<double> freq(n_modes);
    for (size_t k = 0; k < n_modes; k++) {
        freq[k] = node_frequency(device.nodes()[k], flux);
        if (!(freq[k] > 0)) {
            throw ValidationError("mode '" + device.nodes()[k].label + "' has non-positive frequency at this bias");
        }
    }

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t s = 0; s < dim; s++) {
        double e = 0;
        for (size_t k = 0; k < n_modes; k++) {
            double n = basis.occupation_of(s, k);
            e += freq[k] * n + 0.5 * device.nodes()[k].anharmonicity * n * (n - 1);
        }
        h(s, s) = e;
    }

    // x = a + a^dag connects n to n +/- 1 with amplitude sqrt(max(n, n')).
    for (const auto &c : device.couplings()) {
        if (c.g == 0) {
            continue;
        }
        size_t i = device.index_of(c.node_a);
        size_t j = device.index_of(c.node_b);
        int li = basis.levels()[i];
        int lj = basis.levels()[j];
        for (size_t s = 0; s < dim; s++) {
            int ni = basis.occupation_of(s, i);
            int nj = basis.occupation_of(s, j);
            for (int di : {-1, 1}) {
                int mi = ni + di;
                if (mi < 0 || mi >= li) {
                    continue;
                }
                double fi = std::sqrt(static_cast<double>(std::max(ni, mi)));
                for (int dj : {-1, 1}) {
                    int mj = nj + dj;
                    if (mj < 0 || mj >= lj) {
                        continue;
                    }
                    double fj = std::sqrt(static_cast<double>(std::max(nj, mj)));
                    size_t t = s + di * static_cast<std::ptrdiff_t>(basis.stride(i)) +
                               dj * static_cast<std::ptrdiff_t>(basis.stride(j));
                    h(t, s) += c.g * fi * fj;
                }
            }
        }
    }
    return HamiltonianMatrix{std::move(h), std::move(basis), flux};
}

double bare_energy(const Occupation &occupation, const DeviceGraph &device, const FluxPoint &flux) {
    if (occupation.size() != device.size()) {
        throw ValidationError("occupation length does not match node count");
    }
    double e = 0;
    for (size_t k = 0; k < device.size(); k++) {
        const auto &node = device.nodes()[k];
        double n = occupation[k];
        e += node_frequency(node, flux) * n + 0.5 * node.anharmonicity * n * (n - 1);
    }
    return e;
}

}  // namespace spectator
