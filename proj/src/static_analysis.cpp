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

#include "spectator/static_analysis.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "spectator/eigensystem.hpp"
#include "spectator/errors.hpp"
#include "spectator/labeling.hpp"
#include "spectator/optimize.hpp"

namespace spectator {

std::string describe(const SpectatorState &spectator) {
    if (spectator.empty()) {
        return "none";
    }
    std::string out;
    for (const auto &[label, n] : spectator) {
        if (!out.empty()) {
            out += ',';
        }
        out += label + "=" + std::to_string(n);
    }
    return out;
}

Occupation branch_label(const ModeBasis &basis, const std::string &excited, const SpectatorState &spectator) {
    Occupation occ = basis.make(spectator);
    occ[basis.mode_index(excited)] = 1;
    return occ;
}

double static_zz(const DeviceGraph &device, const FluxPoint &flux, const LabelPair &pair, int levels) {
    for (const auto &label : {pair.first, pair.second}) {
        if (device.node(label).tunable) {
            throw ValidationError("static_zz: '" + label + "' is a coupler, not a qubit");
        }
    }
    HamiltonianMatrix h = build_hamiltonian(device, flux, levels);
    LabeledSpectrum spectrum = label_eigenstates(h);
    size_t ia = h.basis.mode_index(pair.first);
    size_t ib = h.basis.mode_index(pair.second);
    auto energy = [&](int na, int nb) {
        Occupation occ(h.basis.modes(), 0);
        occ[ia] = na;
        occ[ib] = nb;
        const LabeledEntry &e = spectrum.at(occ);
        if (e.ambiguous) {
            throw AmbiguousLabel("static_zz: state " + ModeBasis::format(occ) + " has overlap " +
                                 std::to_string(e.overlap) + " with its label");
        }
        return e.energy;
    };
    return energy(1, 1) - energy(1, 0) - energy(0, 1) + energy(0, 0);
}

EffectiveCoupling effective_coupling(const DeviceGraph &device, const FluxPoint &flux, const LabelPair &pair,
                                     const SpectatorState &spectator, int levels) {
    HamiltonianMatrix h = build_hamiltonian(device, flux, levels);
    Eigensystem eig = diagonalize(h);
    LabeledSpectrum spectrum = label_eigenstates(eig, h.basis);
    Occupation oa = branch_label(h.basis, pair.first, spectator);
    Occupation ob = branch_label(h.basis, pair.second, spectator);
    const LabeledEntry &ea = spectrum.at(oa);
    const LabeledEntry &eb = spectrum.at(ob);
    Eigen::VectorXd va = eig.vector(ea.eigen_index);
    Eigen::VectorXd vb = eig.vector(eb.eigen_index);
    auto sa = static_cast<Eigen::Index>(ea.basis_index);
    auto sb = static_cast<Eigen::Index>(eb.basis_index);

    Eigen::Matrix2d overlap;
    overlap << va[sa], vb[sa], va[sb], vb[sb];
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
    double smallest = svd.singularValues()[1];
    if (smallest * smallest < kDefaultOverlapFloor) {
        throw AmbiguousLabel("effective coupling: branches " + ModeBasis::format(oa) + " and " +
                             ModeBasis::format(ob) + " keep only " + std::to_string(smallest * smallest) +
                             " of their weight on the bare pair");
    }
    Eigen::Matrix2d rotation = svd.matrixU() * svd.matrixV().transpose();
    Eigen::Matrix2d heff = rotation * Eigen::Vector2d(ea.energy, eb.energy).asDiagonal() * rotation.transpose();
    return EffectiveCoupling{heff(0, 1), ea.energy, eb.energy, smallest * smallest, heff};
}

double signed_effective_coupling(const DeviceGraph &device, const FluxPoint &flux, const LabelPair &pair,
                                 const SpectatorState &spectator, int levels) {
    return effective_coupling(device, flux, pair, spectator, levels).coupling;
}

double branch_difference(const DeviceGraph &device, const FluxPoint &flux, const LabelPair &pair,
                         const SpectatorState &spectator, int levels) {
    HamiltonianMatrix h = build_hamiltonian(device, flux, levels);
    LabeledSpectrum spectrum = label_eigenstates(h);
    return spectrum.at(branch_label(h.basis, pair.first, spectator)).energy -
           spectrum.at(branch_label(h.basis, pair.second, spectator)).energy;
}

GapResult exchange_gap(const DeviceGraph &device, const std::string &gate_coupler, FluxRange sweep,
                       const LabelPair &pair, const SpectatorState &spectator, int levels, const FluxPoint &base,
                       const GapSearch &search) {
    if (!device.node(gate_coupler).tunable) {
        throw ValidationError("exchange_gap: '" + gate_coupler + "' is not tunable");
    }
    if (!(sweep.hi > sweep.lo) || search.scan_points < 3) {
        throw ValidationError("exchange_gap: empty sweep range");
    }
    auto diff = [&](double phi) {
        return branch_difference(device, base.with(gate_coupler, phi), pair, spectator, levels);
    };
    std::vector<double> xs = linspace(sweep.lo, sweep.hi, search.scan_points);
    std::vector<double> ds;
    for (double x : xs) {
        ds.push_back(diff(x));
    }
    for (size_t k = 0; k + 1 < xs.size(); k++) {
        if (ds[k] == 0 || (ds[k] > 0) != (ds[k + 1] > 0)) {
            double lo = xs[k == 0 ? 0 : k - 1];
            double hi = xs[std::min(k + 2, xs.size() - 1)];
            ScalarMinimum best = golden_section_minimize([&](double x) { return std::abs(diff(x)); }, lo, hi,
                                                         search.flux_tol);
            return GapResult{best.x, best.value, spectator, describe(spectator)};
        }
    }
    std::ostringstream msg;
    msg << "no crossing of " << pair.first << " and " << pair.second << " while sweeping " << gate_coupler << " over ["
        << sweep.lo << ", " << sweep.hi << "] (spectators " << describe(spectator)
        << "); endpoint detunings " << ds.front() << " and " << ds.back() << " GHz";
    throw NoResonance(msg.str());
}

double cancellation_bias(const DeviceGraph &device, const std::string &spectator_coupler, FluxRange search,
                         const LabelPair &pair, const SpectatorState &spectator, int levels,
                         const CancellationSearch &options) {
    if (!device.node(spectator_coupler).tunable) {
        throw ValidationError("cancellation_bias: '" + spectator_coupler + "' is not tunable");
    }
    if (!(search.hi > search.lo) || options.scan_points < 2) {
        throw ValidationError("cancellation_bias: empty search range");
    }
    FluxPoint flux = options.base;
    double root = std::numeric_limits<double>::quiet_NaN();
    int passes = options.gate_coupler.empty() ? 1 : std::max(options.passes, 1);
    for (int pass = 0; pass < passes; pass++) {
        if (!options.gate_coupler.empty()) {
            GapResult res = exchange_gap(device, options.gate_coupler, options.gate_sweep, pair, spectator, levels,
                                         flux, options.gap);
            flux = flux.with(options.gate_coupler, res.phi_resonance);
        }
        auto coupling = [&](double phi) {
            return signed_effective_coupling(device, flux.with(spectator_coupler, phi), pair, spectator, levels);
        };
        std::vector<double> xs = linspace(search.lo, search.hi, options.scan_points);
        std::vector<double> js;
        for (double x : xs) {
            js.push_back(coupling(x));
        }
        double found = std::numeric_limits<double>::quiet_NaN();
        for (size_t k = 0; k + 1 < xs.size(); k++) {
            if (js[k] == 0 || (js[k] > 0) != (js[k + 1] > 0)) {
                found = bisect_sign_change(coupling, xs[k], xs[k + 1], js[k], js[k + 1], options.flux_tol);
                break;
            }
        }
        if (std::isnan(found)) {
            double smallest = std::numeric_limits<double>::infinity();
            for (double j : js) {
                smallest = std::min(smallest, std::abs(j));
            }
            std::ostringstream msg;
            msg << "signed coupling of " << pair.first << "-" << pair.second << " keeps its sign over " << spectator_coupler
                << " in [" << search.lo << ", " << search.hi << "] (spectators " << describe(spectator)
                << "); smallest |J| = " << smallest << " GHz";
            throw NoCancellation(msg.str());
        }
        bool settled = !std::isnan(root) && std::abs(found - root) <= options.flux_tol;
        root = found;
        flux = flux.with(spectator_coupler, root);
        if (settled) {
            break;
        }
    }
    return root;
}

}  // namespace spectator
