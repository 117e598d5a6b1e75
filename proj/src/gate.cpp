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

#include "spectator/gate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "spectator/errors.hpp"

namespace spectator {

namespace {

double wrap(double angle) {
    return std::remainder(angle, 2 * std::numbers::pi);
}

size_t position(const std::vector<std::string> &qubits, const std::string &label) {
    auto it = std::find(qubits.begin(), qubits.end(), label);
    if (it == qubits.end()) {
        throw ValidationError("'" + label + "' is not among the gate qubits");
    }
    return static_cast<size_t>(it - qubits.begin());
}

size_t check_block(const Eigen::MatrixXcd &block, const std::vector<std::string> &qubits) {
    size_t d = size_t{1} << qubits.size();
    if (static_cast<size_t>(block.rows()) != d || static_cast<size_t>(block.cols()) != d) {
        throw ValidationError("block is not 2^n square for " + std::to_string(qubits.size()) + " qubits");
    }
    return d;
}

}  // namespace

int qubit_bit(size_t state, size_t qubit, size_t n_qubits) {
    return static_cast<int>((state >> (n_qubits - 1 - qubit)) & 1U);
}

Eigen::VectorXd cz_phases(const std::vector<std::string> &qubits, const std::vector<LabelPair> &pairs) {
    size_t n = qubits.size();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size_t{1} << n));
    for (const auto &p : pairs) {
        size_t a = position(qubits, p.first);
        size_t b = position(qubits, p.second);
        for (Eigen::Index s = 0; s < out.size(); s++) {
            if (qubit_bit(static_cast<size_t>(s), a, n) && qubit_bit(static_cast<size_t>(s), b, n)) {
                out[s] += std::numbers::pi;
            }
        }
    }
    return out;
}

VirtualZ extract_virtual_z(const Eigen::MatrixXcd &block, const std::vector<std::string> &qubits,
                           const Eigen::VectorXd &target_phases) {
    size_t d = check_block(block, qubits);
    size_t n = qubits.size();
    Eigen::VectorXd target = target_phases.size() ? target_phases : Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
    if (static_cast<size_t>(target.size()) != d) {
        throw ValidationError("target phase vector has the wrong length");
    }
    Eigen::VectorXd raw(static_cast<Eigen::Index>(d));
    for (size_t s = 0; s < d; s++) {
        auto i = static_cast<Eigen::Index>(s);
        if (std::abs(block(i, i)) < 0.5) {
            throw NotPhaseLike("diagonal element " + std::to_string(s) + " has magnitude " +
                               std::to_string(std::abs(block(i, i))) + " < 0.5");
        }
        raw[i] = std::arg(block(i, i)) - target[i];
    }

    // Exact estimate from |0..0> and the single-excitation states.
    Eigen::VectorXd coef(static_cast<Eigen::Index>(n + 1));
    coef[0] = raw[0];
    for (size_t q = 0; q < n; q++) {
        coef[static_cast<Eigen::Index>(q + 1)] = wrap(raw[static_cast<Eigen::Index>(size_t{1} << (n - 1 - q))] - raw[0]);
    }
    Eigen::MatrixXd design(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n + 1));
    for (size_t s = 0; s < d; s++) {
        design(static_cast<Eigen::Index>(s), 0) = 1;
        for (size_t q = 0; q < n; q++) {
            design(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(q + 1)) = qubit_bit(s, q, n);
        }
    }
    auto residual = [&](const Eigen::VectorXd &c) {
        Eigen::VectorXd model = design * c;
        Eigen::VectorXd r(model.size());
        for (Eigen::Index s = 0; s < r.size(); s++) {
            r[s] = wrap(raw[s] - model[s]);
        }
        return r;
    };
    coef += design.colPivHouseholderQr().solve(residual(coef));

    VirtualZ out;
    out.global_phase = wrap(coef[0]);
    for (size_t q = 0; q < n; q++) {
        out.phases[qubits[q]] = wrap(coef[static_cast<Eigen::Index>(q + 1)]);
    }
    Eigen::VectorXd r = residual(coef);
    out.rms_residual = std::sqrt(r.squaredNorm() / static_cast<double>(d));
    return out;
}

Eigen::MatrixXcd apply_virtual_z(const Eigen::MatrixXcd &block, const VirtualZ &vz,
                                 const std::vector<std::string> &qubits) {
    size_t d = check_block(block, qubits);
    size_t n = qubits.size();
    Eigen::MatrixXcd out = block;
    for (size_t s = 0; s < d; s++) {
        double phase = vz.global_phase;
        for (size_t q = 0; q < n; q++) {
            auto it = vz.phases.find(qubits[q]);
            if (it != vz.phases.end() && qubit_bit(s, q, n)) {
                phase += it->second;
            }
        }
        out.row(static_cast<Eigen::Index>(s)) *= std::polar(1.0, -phase);
    }
    return out;
}

double average_gate_fidelity(const Eigen::MatrixXcd &actual, const Eigen::MatrixXcd &target) {
    if (actual.rows() != target.rows() || actual.cols() != target.cols() || actual.rows() != actual.cols()) {
        throw ValidationError("fidelity needs square blocks of equal size");
    }
    auto d = static_cast<double>(actual.rows());
    Eigen::MatrixXcd m = target.adjoint() * actual;
    double gram = (m.adjoint() * m).trace().real();
    return (gram + std::norm(m.trace())) / (d * (d + 1));
}

double block_leakage(const Eigen::MatrixXcd &block) {
    return 1.0 - block.colwise().squaredNorm().mean();
}

std::vector<Occupation> qubit_labels(const ModeBasis &basis, const std::vector<std::string> &qubits) {
    size_t n = qubits.size();
    std::vector<size_t> modes;
    for (const auto &q : qubits) {
        modes.push_back(basis.mode_index(q));
    }
    std::vector<Occupation> out;
    for (size_t s = 0; s < (size_t{1} << n); s++) {
        Occupation occ(basis.modes(), 0);
        for (size_t q = 0; q < n; q++) {
            occ[modes[q]] = qubit_bit(s, q, n);
        }
        out.push_back(std::move(occ));
    }
    return out;
}

Eigen::MatrixXcd computational_block(Propagator &propagator, const DressedBasis &idle,
                                     const std::vector<ScheduleStep> &steps, const std::vector<std::string> &qubits) {
    std::vector<Occupation> labels = qubit_labels(idle.basis(), qubits);
    auto d = static_cast<Eigen::Index>(labels.size());
    auto dim = static_cast<Eigen::Index>(idle.basis().dimension());
    Eigen::MatrixXcd frame(dim, d);
    for (Eigen::Index c = 0; c < d; c++) {
        const LabeledEntry &e = idle.spectrum.at(labels[static_cast<size_t>(c)]);
        if (e.ambiguous) {
            throw AmbiguousLabel("computational state " + ModeBasis::format(labels[static_cast<size_t>(c)]) +
                                 " is ambiguous at the idle bias");
        }
        frame.col(c) = idle.state(labels[static_cast<size_t>(c)]).cast<std::complex<double>>();
    }
    Eigen::MatrixXcd evolved = frame;
    propagator.run(steps, evolved);
    return frame.adjoint() * evolved;
}

GateReport score_block(const Eigen::MatrixXcd &block, const std::vector<std::string> &qubits,
                       const std::vector<LabelPair> &cz_pairs, const LabelPair &pair) {
    size_t d = check_block(block, qubits);
    size_t n = qubits.size();
    double leak = block_leakage(block);
    if (leak > 0.5) {
        throw DivergedGate("gate on " + pair.first + "-" + pair.second + " leaks " + std::to_string(leak) +
                           " of the computational population");
    }
    Eigen::VectorXd phases = cz_phases(qubits, cz_pairs);
    VirtualZ vz = extract_virtual_z(block, qubits, phases);
    Eigen::MatrixXcd corrected = apply_virtual_z(block, vz, qubits);
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (Eigen::Index s = 0; s < static_cast<Eigen::Index>(d); s++) {
        target(s, s) = std::polar(1.0, phases[s]);
    }

    GateReport report;
    report.pair = pair;
    report.fidelity_avg = average_gate_fidelity(corrected, target);
    report.virtual_z = vz.phases;

    size_t ia = position(qubits, pair.first);
    size_t ib = position(qubits, pair.second);
    std::vector<size_t> others;
    for (size_t q = 0; q < n; q++) {
        if (q != ia && q != ib) {
            others.push_back(q);
        }
    }
    double worst = 1.0;
    double ground = 1.0;
    double ground_leak = 0;
    for (size_t m = 0; m < (size_t{1} << others.size()); m++) {
        size_t base = 0;
        for (size_t k = 0; k < others.size(); k++) {
            if ((m >> (others.size() - 1 - k)) & 1U) {
                base |= size_t{1} << (n - 1 - others[k]);
            }
        }
        std::vector<Eigen::Index> idx;
        for (int a : {0, 1}) {
            for (int b : {0, 1}) {
                size_t s = base | (static_cast<size_t>(a) << (n - 1 - ia)) | (static_cast<size_t>(b) << (n - 1 - ib));
                idx.push_back(static_cast<Eigen::Index>(s));
            }
        }
        Eigen::MatrixXcd sub(4, 4);
        Eigen::MatrixXcd tsub(4, 4);
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) {
                sub(r, c) = corrected(idx[r], idx[c]);
                tsub(r, c) = target(idx[r], idx[c]);
            }
        }
        double f = average_gate_fidelity(sub, tsub);
        worst = std::min(worst, f);
        if (m == 0) {
            ground = f;
            double norms = 0;
            for (Eigen::Index c : idx) {
                norms += corrected.col(c).squaredNorm();
            }
            ground_leak = 1 - norms / 4;
        }
    }
    report.spectator_ground_fidelity = ground;
    report.worst_case_fidelity = worst;
    report.leakage = others.empty() ? leak : ground_leak;
    std::string qs;
    for (const auto &q : qubits) {
        qs += (qs.empty() ? "" : ",") + q;
    }
    std::string cz;
    for (const auto &p : cz_pairs) {
        cz += (cz.empty() ? "" : ",") + p.first + "-" + p.second;
    }
    report.conditions = "qubits=" + qs + "; cz=" + cz + "; spectators scanned over all computational states";
    return report;
}

GateReport gate_fidelity(Propagator &propagator, const DressedBasis &idle, const FluxSchedule &schedule,
                         const LabelPair &pair, const std::vector<std::string> &spectators, double dt) {
    const DeviceGraph &device = propagator.device();
    std::vector<std::string> qubits;
    for (const auto &n : device.nodes()) {
        bool wanted = n.label == pair.first || n.label == pair.second ||
                      std::find(spectators.begin(), spectators.end(), n.label) != spectators.end();
        if (wanted) {
            if (n.tunable) {
                throw ValidationError("'" + n.label + "' is a coupler and cannot be a gate qubit");
            }
            qubits.push_back(n.label);
        }
    }
    if (qubits.size() != 2 + spectators.size()) {
        throw ValidationError("gate qubits must be distinct device nodes");
    }
    std::vector<ScheduleStep> steps = discretize_checked(schedule, device, dt);
    Eigen::MatrixXcd block = computational_block(propagator, idle, steps, qubits);
    return score_block(block, qubits, {pair}, pair);
}

GateReport gate_fidelity(const DeviceGraph &device, const FluxSchedule &schedule, const LabelPair &pair,
                         const std::vector<std::string> &spectators, int levels, double dt) {
    Propagator propagator(device, levels);
    DressedBasis idle = dressed_basis(device, schedule.idle, levels);
    return gate_fidelity(propagator, idle, schedule, pair, spectators, dt);
}

}  // namespace spectator
