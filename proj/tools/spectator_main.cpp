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

// Command-line front end. Every subcommand writes <out>.csv and/or
// <out>.json plus <out>.manifest.json.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "json.hpp"
#include "spectator/calibration.hpp"
#include "spectator/errors.hpp"
#include "spectator/labeling.hpp"
#include "spectator/optimize.hpp"
#include "spectator/parallel.hpp"
#include "spectator/serialization.hpp"

using namespace spectator;
using namespace spectator::cli;

namespace {

struct Common {
    std::string device_file;
    int levels = 3;
    double dt = 0.25;
    std::string out;
    int workers = 0;
    std::string flux;
    std::optional<double> phi01;
    std::optional<double> phi14;
};

void add_common(CLI::App *app, Common &c) {
    app->add_option("--device", c.device_file, "Device config (JSON)")->required();
    app->add_option("--levels", c.levels, "Fock levels per mode unless the node sets its own")->capture_default_str();
    app->add_option("--dt-ns", c.dt, "Ramp step in ns")->capture_default_str();
    app->add_option("--out", c.out, "Output path prefix")->required();
    app->add_option("--workers", c.workers, "Worker threads (0 = all cores)")->capture_default_str();
    app->add_option("--flux", c.flux, "Coupler biases, e.g. C01=0.32,C14=0.322");
    app->add_option("--phi01", c.phi01, "Bias of coupler C01 (overrides --flux)");
    app->add_option("--phi14", c.phi14, "Bias of coupler C14 (overrides --flux)");
}

FluxPoint idle_flux(const Common &c) {
    FluxPoint f = parse_flux(c.flux);
    if (c.phi01) {
        f.biases["C01"] = *c.phi01;
    }
    if (c.phi14) {
        f.biases["C14"] = *c.phi14;
    }
    return f;
}

struct PulseArgs {
    std::string gate_coupler;
    double amplitude = 0;
    double rise = 10;
    double hold = 0;
};

void add_pulse(CLI::App *app, PulseArgs &p) {
    app->add_option("--gate-coupler", p.gate_coupler, "Coupler carrying the gate pulse")->required();
    app->add_option("--amplitude", p.amplitude, "Gate pulse amplitude (flux quanta)")->required();
    app->add_option("--rise-ns", p.rise, "Ramp time")->capture_default_str();
    app->add_option("--hold-ns", p.hold, "Flat-top time")->capture_default_str();
}

PulseShape pulse_of(const PulseArgs &p) {
    if (!(p.rise > 0) || p.hold < 0) {
        throw ValidationError("--rise-ns must be > 0 and --hold-ns >= 0");
    }
    return PulseShape{p.amplitude, p.rise, p.hold};
}

void check_range(double lo, double hi, int points, const std::string &what) {
    if (!(hi > lo)) {
        throw ValidationError(what + ": empty range [" + format_float(lo) + ", " + format_float(hi) + "]");
    }
    if (points < 2) {
        throw ValidationError(what + ": need at least 2 points");
    }
}

RunManifest manifest_for(const CLI::App *app, const Common &c, const std::vector<std::string> &argv) {
    RunManifest m;
    m.command = app->get_name();
    m.device_file = c.device_file;
    for (const CLI::Option *opt : app->get_options()) {
        if (opt->get_name() == "--help" || opt->get_name().empty()) {
            continue;
        }
        std::string value;
        if (opt->count()) {
            for (const auto &r : opt->results()) {
                value += (value.empty() ? "" : " ") + r;
            }
        } else {
            value = opt->get_default_str();
        }
        m.parameters[opt->get_name()] = value;
    }
    m.argv = argv;
    return m;
}

std::string labeled_csv(const LabeledSpectrum &spectrum) {
    std::ostringstream out;
    out << "label,energy_ghz,overlap,ambiguous\n";
    for (const auto &e : spectrum.entries()) {
        out << ModeBasis::format(e.label) << "," << format_float(e.energy) << "," << format_float(e.overlap) << ","
            << (e.ambiguous ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<std::string> args(argv, argv + argc);
    CLI::App app{"Spectator-error simulator for tunable-coupler transmon devices"};
    app.require_subcommand(1);

    // spectrum
    Common spec_c;
    auto *spec = app.add_subcommand("spectrum", "Labeled dressed spectrum at one bias");
    add_common(spec, spec_c);

    // zz-sweep
    Common zz_c;
    std::string zz_pair;
    std::string zz_coupler;
    double zz_from = 0;
    double zz_to = 0;
    int zz_points = 41;
    auto *zz = app.add_subcommand("zz-sweep", "Static ZZ of a pair versus one coupler bias");
    add_common(zz, zz_c);
    zz->add_option("--pair", zz_pair, "Qubit pair A,B")->required();
    zz->add_option("--coupler", zz_coupler, "Swept coupler")->required();
    zz->add_option("--from", zz_from)->required();
    zz->add_option("--to", zz_to)->required();
    zz->add_option("--points", zz_points)->capture_default_str();

    // gap-sweep
    Common gap_c;
    std::string gap_pair;
    std::string gap_gate;
    double gap_gate_from = 0;
    double gap_gate_to = 0;
    std::string gap_spectator;
    std::string gap_states = "0,1";
    std::string gap_coupler;
    double gap_from = 0;
    double gap_to = 0;
    int gap_points = 21;
    auto *gap = app.add_subcommand("gap-sweep", "Exchange gap and signed coupling versus a spectator-side bias");
    add_common(gap, gap_c);
    gap->add_option("--pair", gap_pair, "Qubit pair A,B")->required();
    gap->add_option("--gate-coupler", gap_gate, "Coupler swept to find the resonance")->required();
    gap->add_option("--gate-from", gap_gate_from)->required();
    gap->add_option("--gate-to", gap_gate_to)->required();
    gap->add_option("--spectator", gap_spectator, "Spectator qubit label")->required();
    gap->add_option("--states", gap_states, "Spectator states to run")->capture_default_str();
    gap->add_option("--coupler", gap_coupler, "Coupler whose bias is stepped")->required();
    gap->add_option("--from", gap_from)->required();
    gap->add_option("--to", gap_to)->required();
    gap->add_option("--points", gap_points)->capture_default_str();

    // lz
    Common lz_c;
    PulseArgs lz_p;
    int lz_n = 4;
    std::string lz_source;
    std::string lz_target;
    std::string lz_spectator;
    double lz_tau_from = 0;
    double lz_tau_to = 100;
    int lz_tau_points = 81;
    std::optional<double> lz_tau;
    std::string lz_comp_coupler;
    std::string lz_companion;
    double lz_comp_amp = 0;
    auto *lz = app.add_subcommand("lz", "Multi-pulse interferometry: transfer versus delay");
    add_common(lz, lz_c);
    add_pulse(lz, lz_p);
    lz->add_option("--n-pulses", lz_n)->capture_default_str();
    lz->add_option("--source", lz_source, "Initially excited qubit")->required();
    lz->add_option("--target", lz_target, "Qubit whose population is read")->required();
    lz->add_option("--spectator", lz_spectator, "Other qubits held excited, e.g. Q4=1");
    lz->add_option("--tau-from", lz_tau_from)->capture_default_str();
    lz->add_option("--tau-to", lz_tau_to)->capture_default_str();
    lz->add_option("--tau-points", lz_tau_points)->capture_default_str();
    lz->add_option("--tau-ns", lz_tau, "Single delay instead of a range");
    lz->add_option("--comp-coupler", lz_comp_coupler, "Coupler carrying a compensation pulse");
    lz->add_option("--companion", lz_companion, "Simultaneous gate pulses, e.g. C14=0.075:30:66.7");
    lz->add_option("--comp-amplitude", lz_comp_amp)->capture_default_str();

    // compensate
    Common cp_c;
    PulseArgs cp_p;
    int cp_n = 4;
    std::string cp_source;
    std::string cp_target;
    std::string cp_spectator;
    std::string cp_comp_coupler;
    std::string cp_companion;
    double cp_amp_from = -0.1;
    double cp_amp_to = 0.1;
    int cp_grid = 41;
    double cp_tol = 1e-4;
    std::optional<double> cp_tau;
    double cp_tau_from = 0;
    double cp_tau_to = 100;
    int cp_tau_points = 81;
    auto *cp = app.add_subcommand("compensate", "Calibrate a compensation pulse amplitude");
    add_common(cp, cp_c);
    add_pulse(cp, cp_p);
    cp->add_option("--n-pulses", cp_n)->capture_default_str();
    cp->add_option("--source", cp_source)->required();
    cp->add_option("--target", cp_target)->required();
    cp->add_option("--spectator", cp_spectator);
    cp->add_option("--comp-coupler", cp_comp_coupler)->required();
    cp->add_option("--companion", cp_companion, "Simultaneous gate pulses, e.g. C14=0.075:30:66.7");
    cp->add_option("--amp-from", cp_amp_from)->capture_default_str();
    cp->add_option("--amp-to", cp_amp_to)->capture_default_str();
    cp->add_option("--grid", cp_grid)->capture_default_str();
    cp->add_option("--tol", cp_tol)->capture_default_str();
    cp->add_option("--tau-ns", cp_tau, "Fixed delay; otherwise the constructive delay is searched");
    cp->add_option("--tau-from", cp_tau_from)->capture_default_str();
    cp->add_option("--tau-to", cp_tau_to)->capture_default_str();
    cp->add_option("--tau-points", cp_tau_points)->capture_default_str();

    // fidelity-sweep
    Common fs_c;
    PulseArgs fs_p;
    std::string fs_pair;
    std::string fs_spectators;
    std::string fs_coupler;
    double fs_from = 0;
    double fs_to = 0;
    int fs_points = 11;
    auto *fsw = app.add_subcommand("fidelity-sweep", "Gate infidelity versus a spectator coupler bias");
    add_common(fsw, fs_c);
    add_pulse(fsw, fs_p);
    fsw->add_option("--pair", fs_pair)->required();
    fsw->add_option("--spectators", fs_spectators, "Spectator qubits, e.g. Q0");
    fsw->add_option("--coupler", fs_coupler, "Swept coupler")->required();
    fsw->add_option("--from", fs_from)->required();
    fsw->add_option("--to", fs_to)->required();
    fsw->add_option("--points", fs_points)->capture_default_str();

    // parallel
    Common par_c;
    std::string par_gates;
    bool par_no_comp = false;
    auto *par = app.add_subcommand("parallel", "Simultaneous gates scored pair by pair");
    add_common(par, par_c);
    par->add_option("--gates", par_gates, "JSON file with a \"gates\" list")->required();
    par->add_flag("--no-compensation", par_no_comp, "Drop all compensation pulses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitValidation;
    }

    return run_guarded([&] {
        if (spec->parsed()) {
            DeviceGraph device = load_device_file(spec_c.device_file);
            FluxPoint flux = idle_flux(spec_c);
            HamiltonianMatrix h = build_hamiltonian(device, flux, spec_c.levels);
            LabeledSpectrum spectrum = label_eigenstates(h);
            RunManifest m = manifest_for(spec, spec_c, args);
            m.output_paths = {spec_c.out + ".csv"};
            atomic_write(m.output_paths[0], labeled_csv(spectrum));
            write_manifest(spec_c.out, m);
        } else if (zz->parsed()) {
            DeviceGraph device = load_device_file(zz_c.device_file);
            FluxPoint flux = idle_flux(zz_c);
            LabelPair pair = parse_pair(zz_pair);
            check_range(zz_from, zz_to, zz_points, "zz-sweep");
            device.node(zz_coupler);
            std::vector<double> xs = linspace(zz_from, zz_to, zz_points);
            std::vector<double> ys = parallel_map(xs.size(), zz_c.workers, [&](size_t k) {
                return static_zz(device, flux.with(zz_coupler, xs[k]), pair, zz_c.levels);
            });
            SweepTable table;
            table.columns = {"bias", "zz_ghz"};
            for (size_t k = 0; k < xs.size(); k++) {
                table.add_row({xs[k], ys[k]});
            }
            RunManifest m = manifest_for(zz, zz_c, args);
            m.output_paths = {zz_c.out + ".csv"};
            atomic_write(m.output_paths[0], table.to_csv());
            write_manifest(zz_c.out, m);
        } else if (gap->parsed()) {
            DeviceGraph device = load_device_file(gap_c.device_file);
            FluxPoint flux = idle_flux(gap_c);
            LabelPair pair = parse_pair(gap_pair);
            check_range(gap_from, gap_to, gap_points, "gap-sweep");
            check_range(gap_gate_from, gap_gate_to, 2, "gap-sweep gate range");
            device.node(gap_spectator);
            std::vector<int> states;
            for (const auto &s : parse_labels(gap_states)) {
                if (s != "0" && s != "1") {
                    throw ValidationError("--states: expected 0 and/or 1, got '" + s + "'");
                }
                states.push_back(s == "1");
            }
            std::vector<double> xs = linspace(gap_from, gap_to, gap_points);
            size_t n = xs.size() * states.size();
            auto rows = parallel_map(n, gap_c.workers, [&](size_t k) {
                int state = states[k / xs.size()];
                double x = xs[k % xs.size()];
                SpectatorState spectator{{gap_spectator, state}};
                FluxPoint base = flux.with(gap_coupler, x);
                GapResult r = exchange_gap(device, gap_gate, {gap_gate_from, gap_gate_to}, pair, spectator,
                                           gap_c.levels, base);
                double j = signed_effective_coupling(device, base.with(gap_gate, r.phi_resonance), pair, spectator,
                                                     gap_c.levels);
                return std::vector<double>{x, static_cast<double>(state), r.phi_resonance, r.gap, j};
            });
            SweepTable table;
            table.columns = {"bias", "spectator_state", "phi_resonance", "gap_ghz", "coupling_ghz"};
            for (auto &r : rows) {
                table.add_row(std::move(r));
            }
            RunManifest m = manifest_for(gap, gap_c, args);
            m.output_paths = {gap_c.out + ".csv"};
            atomic_write(m.output_paths[0], table.to_csv());
            write_manifest(gap_c.out, m);
        } else if (lz->parsed()) {
            LzExperiment e{load_device_file(lz_c.device_file), idle_flux(lz_c), lz_p.gate_coupler, pulse_of(lz_p),
                           lz_n, lz_source, lz_target, parse_spectator(lz_spectator)};
            e.companion_pulses = parse_companions(lz_companion);
            e.levels = lz_c.levels;
            e.dt = lz_c.dt;
            if (!lz_comp_coupler.empty()) {
                e.compensation = Compensation{lz_comp_coupler, lz_comp_amp};
            }
            std::vector<double> taus;
            if (lz_tau) {
                taus = {*lz_tau};
            } else {
                check_range(lz_tau_from, lz_tau_to, lz_tau_points, "lz delay");
                taus = linspace(lz_tau_from, lz_tau_to, lz_tau_points);
            }
            SweepTable table = lz_interferometry(e, taus, lz_c.workers);
            RunManifest m = manifest_for(lz, lz_c, args);
            m.output_paths = {lz_c.out + ".csv"};
            atomic_write(m.output_paths[0], table.to_csv());
            write_manifest(lz_c.out, m);
        } else if (cp->parsed()) {
            LzExperiment e{load_device_file(cp_c.device_file), idle_flux(cp_c), cp_p.gate_coupler, pulse_of(cp_p),
                           cp_n, cp_source, cp_target, parse_spectator(cp_spectator)};
            e.companion_pulses = parse_companions(cp_companion);
            e.levels = cp_c.levels;
            e.dt = cp_c.dt;
            LzRunner runner(e);
            nlohmann::ordered_json result;
            try {
                double tau = cp_tau ? *cp_tau
                                    : find_constructive_tau(runner, {cp_tau_from, cp_tau_to}, cp_tau_points,
                                                            cp_c.workers);
                CompensationSetting s = optimize_compensation(runner, cp_comp_coupler, tau, {cp_amp_from, cp_amp_to},
                                                              cp_grid, cp_tol, cp_c.workers);
                result = to_json(s);
                result["status"] = s.boundary_optimum ? "boundary_optimum" : "ok";
                if (s.boundary_optimum) {
                    std::cerr << "warning: optimum on the edge of the amplitude range\n";
                }
            } catch (const NothingToCalibrate &err) {
                // A cancelled device is a valid outcome: no pulse needed.
                std::cerr << "note: " << err.what() << "\n";
                CompensationSetting s;
                s.coupler = cp_comp_coupler;
                result = to_json(s);
                result["status"] = "nothing_to_calibrate";
                result["message"] = err.what();
            }
            RunManifest m = manifest_for(cp, cp_c, args);
            m.output_paths = {cp_c.out + ".json"};
            atomic_write(m.output_paths[0], dump(result));
            write_manifest(cp_c.out, m);
        } else if (fsw->parsed()) {
            DeviceGraph device = load_device_file(fs_c.device_file);
            check_range(fs_from, fs_to, std::max(fs_points, 3), "fidelity-sweep");
            if (fs_points < 3) {
                throw ValidationError("fidelity-sweep: need at least 3 points");
            }
            GateSpec gate{parse_pair(fs_pair), fs_p.gate_coupler, pulse_of(fs_p), {}};
            FidelitySweep sweep = fidelity_sweep(device, idle_flux(fs_c), gate, parse_labels(fs_spectators),
                                                 fs_coupler, linspace(fs_from, fs_to, fs_points), fs_c.levels,
                                                 fs_c.dt, fs_c.workers);
            nlohmann::ordered_json summary;
            summary["swept_coupler"] = fs_coupler;
            summary["best_bias"] = sweep.best_bias;
            summary["gate"] = to_json(gate);
            RunManifest m = manifest_for(fsw, fs_c, args);
            m.output_paths = {fs_c.out + ".csv", fs_c.out + ".json"};
            atomic_write(m.output_paths[0], sweep.table.to_csv());
            atomic_write(m.output_paths[1], dump(summary));
            write_manifest(fs_c.out, m);
        } else if (par->parsed()) {
            DeviceGraph device = load_device_file(par_c.device_file);
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(read_text(par_gates));
            } catch (const nlohmann::json::parse_error &err) {
                throw ValidationError(par_gates + ": " + err.what());
            }
            if (!doc.is_object() || !doc.contains("gates") || !doc["gates"].is_array()) {
                throw ValidationError(par_gates + ": expected an object with a \"gates\" list");
            }
            std::vector<GateSpec> gates;
            for (size_t k = 0; k < doc["gates"].size(); k++) {
                gates.push_back(gate_spec_from_json(doc["gates"][k], "gates[" + std::to_string(k) + "]"));
                if (par_no_comp) {
                    gates.back().compensations.clear();
                }
            }
            std::vector<GateReport> reports =
                parallel_gate_report(device, idle_flux(par_c), gates, par_c.levels, par_c.dt);
            nlohmann::ordered_json out = nlohmann::ordered_json::array();
            for (const auto &r : reports) {
                out.push_back(to_json(r));
            }
            RunManifest m = manifest_for(par, par_c, args);
            m.output_paths = {par_c.out + ".json"};
            atomic_write(m.output_paths[0], dump(out));
            write_manifest(par_c.out, m);
        }
    });
}
