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

#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "spectator/labeling.hpp"

using namespace spectator;
using namespace testing_support;

TEST(Labeling, UncoupledLabelsAreBare) {
    DeviceGraph d({qubit("A", 5.0), qubit("B", 5.3), coupler("C", 8.0)}, {});
    HamiltonianMatrix h = build_hamiltonian(d, FluxPoint{{{"C", 0.1}}}, 3);
    LabeledSpectrum s = label_eigenstates(h);
    for (const auto &e : s.entries()) {
        EXPECT_NEAR(e.energy, bare_energy(e.label, d, h.flux), 1e-9);
        EXPECT_NEAR(e.overlap, 1.0, 1e-12);
    }
}

TEST(Labeling, BijectionAndAscendingOrder) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> f(4.5, 5.5);
    for (int trial = 0; trial < 5; trial++) {
        DeviceGraph d({qubit("A", f(rng)), qubit("B", f(rng)), coupler("C", 8.0)},
                      {link("A", "C", 0.08), link("B", "C", 0.08), link("A", "B", 0.01)});
        HamiltonianMatrix h = build_hamiltonian(d, FluxPoint{{{"C", 0.3}}}, 3);
        LabeledSpectrum s = label_eigenstates(h);
        std::vector<int> seen(h.basis.dimension(), 0);
        double last = -1e300;
        for (const auto &e : s.entries()) {
            seen[e.basis_index]++;
            EXPECT_GE(e.energy, last);
            last = e.energy;
            EXPECT_EQ(s.at(e.label).eigen_index, e.eigen_index);
        }
        for (int c : seen) {
            EXPECT_EQ(c, 1);
        }
    }
}

TEST(Labeling, DressedBasisStatesCarryTheirLabel) {
    DeviceGraph d({qubit("A", 5.0), qubit("B", 5.3), coupler("C", 8.0)},
                  {link("A", "C", 0.08), link("B", "C", 0.08)});
    DressedBasis b = dressed_basis(d, FluxPoint{{{"C", 0.2}}}, 3);
    Occupation a1 = b.basis().make({{"A", 1}});
    Eigen::VectorXd v = b.state(a1);
    EXPECT_GT(v[static_cast<Eigen::Index>(b.basis().index(a1))], 0.9);
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
}
