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

#include "spectator/labeling.hpp"

#include "spectator/assignment.hpp"
#include "spectator/errors.hpp"

namespace spectator {

LabeledSpectrum::LabeledSpectrum(ModeBasis basis, std::vector<LabeledEntry> entries)
    : basis_(std::move(basis)), entries_(std::move(entries)), by_basis_(basis_.dimension(), 0) {
    std::vector<char> seen(basis_.dimension(), 0);
    for (size_t k = 0; k < entries_.size(); k++) {
        size_t b = entries_[k].basis_index;
        if (b >= seen.size() || seen[b]) {
            throw ValidationError("labels do not form a bijection with the basis");
        }
        seen[b] = 1;
        by_basis_[b] = k;
    }
}

const LabeledEntry &LabeledSpectrum::at(const Occupation &label) const {
    return at_basis(basis_.index(label));
}

LabeledSpectrum label_eigenstates(const Eigensystem &eig, const ModeBasis &basis, double floor) {
    if (eig.dimension() != basis.dimension()) {
        throw ValidationError("eigensystem and basis dimensions differ");
    }
    // Eigen index of each (block, column).
    std::vector<std::vector<size_t>> eigen_index(eig.blocks().size());
    for (size_t b = 0; b < eig.blocks().size(); b++) {
        eigen_index[b].resize(eig.blocks()[b].indices.size());
    }
    for (size_t k = 0; k < eig.dimension(); k++) {
        auto [b, c] = eig.locate(k);
        eigen_index[b][static_cast<size_t>(c)] = k;
    }

    std::vector<LabeledEntry> entries(eig.dimension());
    for (size_t b = 0; b < eig.blocks().size(); b++) {
        const auto &block = eig.blocks()[b];
        Eigen::MatrixXd weight = block.vectors.cwiseAbs2();  // rows: bare states, cols: eigenvectors
        std::vector<int> match = max_weight_assignment(weight);
        for (size_t r = 0; r < match.size(); r++) {
            auto c = static_cast<Eigen::Index>(match[r]);
            size_t k = eigen_index[b][static_cast<size_t>(c)];
            auto &e = entries[k];
            e.energy = eig.values()[static_cast<Eigen::Index>(k)];
            e.basis_index = static_cast<size_t>(block.indices[r]);
            e.label = basis.occupation(e.basis_index);
            e.eigen_index = k;
            e.overlap = weight(static_cast<Eigen::Index>(r), c);
            e.ambiguous = e.overlap <= floor + 1e-9;
        }
    }
    return LabeledSpectrum(basis, std::move(entries));
}

LabeledSpectrum label_eigenstates(const HamiltonianMatrix &h, double floor) {
    return label_eigenstates(diagonalize(h), h.basis, floor);
}

Eigen::VectorXd DressedBasis::state(const Occupation &label) const {
    return eigensystem.vector(spectrum.at(label).eigen_index);
}

DressedBasis dressed_basis(const DeviceGraph &device, const FluxPoint &flux, int levels) {
    HamiltonianMatrix h = build_hamiltonian(device, flux, levels);
    Eigensystem eig = diagonalize(h);
    LabeledSpectrum spectrum = label_eigenstates(eig, h.basis);
    return DressedBasis{std::move(eig), std::move(spectrum)};
}

}  // namespace spectator
