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
#include "spectator/errors.hpp"
#include "spectator/gate.hpp"

using namespace spectator;
using namespace testing_support;

namespace {

using cd = std::complex<double>;

Eigen::MatrixXcd diag_phases(const Eigen::VectorXd &phases) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(phases.size(), phases.size());
    for (Eigen::Index k = 0; k < phases.size(); k++) {
        out(k, k) = std::polar(1.0, phases[k]);
    }
    return out;
}

Eigen::MatrixXcd random_unitary(int d, std::mt19937 &rng) {
    std::normal_distribution<double> n01;
    Eigen::MatrixXcd z(d, d);
    for (int r = 0; r < d; r++) {
        for (int c = 0; c < d; c++) {
            z(r, c) = cd(n01(rng), n01(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    return qr.householderQ();
}

// Single-qubit phases a (qubit 0) and b (qubit 1), global g.
Eigen::VectorXd product_phases(double g, const std::vector<double> &per_qubit) {
    size_t n = per_qubit.size();
    Eigen::VectorXd out(1 << n);
    for (Eigen::Index s = 0; s < out.size(); s++) {
        out[s] = g;
        for (size_t q = 0; q < n; q++) {
            out[s] += qubit_bit(static_cast<size_t>(s), q, n) * per_qubit[q];
        }
    }
    return out;
}

}  // namespace

TEST(Gate, BitOrderIsMostSignificantFirst) {
    EXPECT_EQ(qubit_bit(0b10, 0, 2), 1);
    EXPECT_EQ(qubit_bit(0b10, 1, 2), 0);
    Eigen::VectorXd cz = cz_phases({"A", "B"}, {{"A", "B"}});
    EXPECT_EQ(cz, (Eigen::VectorXd(4) << 0, 0, 0, M_PI).finished());
    EXPECT_THROW(cz_phases({"A", "B"}, {{"A", "C"}}), ValidationError);
}

TEST(Gate, VirtualZOfIdentityIsZero) {
    VirtualZ vz = extract_virtual_z(Eigen::MatrixXcd::Identity(4, 4), {"A", "B"});
    EXPECT_NEAR(vz.phases.at("A"), 0, 1e-15);
    EXPECT_NEAR(vz.phases.at("B"), 0, 1e-15);
    EXPECT_NEAR(vz.global_phase, 0, 1e-15);
}

TEST(Gate, VirtualZRecoversProductPhases) {
    const double alpha = 0.7;
    const double beta = -2.1;
    // diag(1, e^{i alpha}, e^{i beta}, e^{i(alpha + beta)}): the last listed
    // qubit is the least significant bit, so it carries alpha.
    Eigen::MatrixXcd u = diag_phases(product_phases(0, {beta, alpha}));
    VirtualZ vz = extract_virtual_z(u, {"A", "B"});
    EXPECT_NEAR(vz.phases.at("B"), alpha, 1e-12);
    EXPECT_NEAR(vz.phases.at("A"), beta, 1e-12);
    EXPECT_NEAR(vz.rms_residual, 0, 1e-12);
}

TEST(Gate, VirtualZIsIdempotent) {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ph(-M_PI, M_PI);
    for (int trial = 0; trial < 20; trial++) {
        std::vector<std::string> q = {"A", "B", "C"};
        Eigen::VectorXd phases = product_phases(ph(rng), {ph(rng), ph(rng), ph(rng)}) + cz_phases(q, {{"A", "C"}});
        for (Eigen::Index s = 0; s < phases.size(); s++) {
            phases[s] += 0.01 * ph(rng);  // small non-product error
        }
        Eigen::MatrixXcd u = diag_phases(phases);
        Eigen::VectorXd target = cz_phases(q, {{"A", "C"}});
        VirtualZ first = extract_virtual_z(u, q, target);
        VirtualZ again = extract_virtual_z(apply_virtual_z(u, first, q), q, target);
        for (const auto &label : q) {
            EXPECT_LT(std::abs(again.phases.at(label)), 1e-9);
        }
        EXPECT_LT(std::abs(again.global_phase), 1e-9);
    }
}

TEST(Gate, NotPhaseLike) {
    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = 1;
    swap(1, 2) = swap(2, 1) = 1;
    EXPECT_THROW(extract_virtual_z(swap, {"A", "B"}), NotPhaseLike);
}

TEST(Gate, FidelityDefinitionChecks) {
    Eigen::MatrixXcd cz = diag_phases(cz_phases({"A", "B"}, {{"A", "B"}}));
    EXPECT_NEAR(average_gate_fidelity(cz, cz), 1.0, 1e-15);
    EXPECT_NEAR(average_gate_fidelity(cz * cd(0, 1), cz), 1.0, 1e-15);
    std::mt19937 rng(1);
    for (int trial = 0; trial < 50; trial++) {
        Eigen::MatrixXcd u = random_unitary(4, rng);
        double f = average_gate_fidelity(u, cz);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0 + 1e-12);
        // For unitary blocks this is (|Tr(V^dag U)|^2 + d) / (d (d + 1)).
        double tr = std::norm((cz.adjoint() * u).trace());
        EXPECT_NEAR(f, (tr + 4) / 20, 1e-12);
    }
    // A lossy block is penalized.
    EXPECT_NEAR(average_gate_fidelity(0.9 * cz, cz), (4 * 0.81 + 16 * 0.81) / 20, 1e-12);
}

TEST(Gate, Leakage) {
    EXPECT_NEAR(block_leakage(Eigen::MatrixXcd::Identity(4, 4)), 0, 1e-15);
    EXPECT_NEAR(block_leakage(0.5 * Eigen::MatrixXcd::Identity(4, 4)), 0.75, 1e-15);
}

TEST(Gate, ScoreBlockPerfectCzWithSpectator) {
    std::vector<std::string> q = {"S", "A", "B"};
    Eigen::VectorXd phases = cz_phases(q, {{"A", "B"}}) + product_phases(0.4, {0.3, -1.0, 2.0});
    GateReport r = score_block(diag_phases(phases), q, {{"A", "B"}}, {"A", "B"});
    EXPECT_NEAR(r.fidelity_avg, 1, 1e-12);
    EXPECT_NEAR(r.spectator_ground_fidelity, 1, 1e-12);
    EXPECT_NEAR(r.worst_case_fidelity, 1, 1e-12);
    EXPECT_NEAR(r.virtual_z.at("B"), 2.0, 1e-12);
}

TEST(Gate, ScoreBlockSeesConditionalError) {
    // Conditional phase error only when the spectator is excited.
    std::vector<std::string> q = {"S", "A", "B"};
    Eigen::VectorXd phases = cz_phases(q, {{"A", "B"}});
    phases[0b111] += 0.5;
    GateReport r = score_block(diag_phases(phases), q, {{"A", "B"}}, {"A", "B"});
    EXPECT_LT(r.worst_case_fidelity, r.spectator_ground_fidelity - 1e-3);
    EXPECT_LT(r.fidelity_avg, 1 - 1e-3);
    EXPECT_THROW(score_block(0.5 * Eigen::MatrixXcd::Identity(8, 8), q, {{"A", "B"}}, {"A", "B"}), DivergedGate);
}

TEST(Gate, IdleScheduleScoresAsIdentity) {
    DeviceGraph d({qubit("A", 5.0), qubit("B", 5.3), coupler("C", 8.0)}, {});
    FluxSchedule s;
    s.idle = FluxPoint{{{"C", 0.2}}};
    s.duration = 57;
    Propagator p(d, 3);
    DressedBasis idle = dressed_basis(d, s.idle, 3);
    Eigen::MatrixXcd block = computational_block(p, idle, discretize_checked(s, d, 0.25), {"A", "B"});
    GateReport r = score_block(block, {"A", "B"}, {}, {"A", "B"});
    EXPECT_NEAR(r.fidelity_avg, 1, 1e-12);
    EXPECT_NEAR(r.leakage, 0, 1e-12);
}
