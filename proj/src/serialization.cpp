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

#include "spectator/serialization.hpp"

#include "spectator/errors.hpp"

namespace spectator {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const GateReport &report) {
    ordered_json j;
    j["pair"] = {report.pair.first, report.pair.second};
    j["fidelity_avg"] = report.fidelity_avg;
    j["spectator_ground_fidelity"] = report.spectator_ground_fidelity;
    j["worst_case_fidelity"] = report.worst_case_fidelity;
    j["leakage"] = report.leakage;
    ordered_json vz = ordered_json::object();
    for (const auto &[label, phase] : report.virtual_z) {
        vz[label] = phase;
    }
    j["virtual_z"] = vz;
    j["conditions"] = report.conditions;
    return j;
}

ordered_json to_json(const CompensationSetting &setting) {
    ordered_json j;
    j["coupler"] = setting.coupler;
    j["amplitude"] = setting.amplitude;
    j["tau_star"] = setting.tau_star;
    j["residual_transfer"] = setting.residual_transfer;
    j["uncompensated_transfer"] = setting.uncompensated_transfer;
    j["boundary_optimum"] = setting.boundary_optimum;
    return j;
}

ordered_json to_json(const PulseShape &pulse) {
    ordered_json j;
    j["amplitude"] = pulse.amplitude;
    j["rise_ns"] = pulse.rise;
    j["hold_ns"] = pulse.hold;
    return j;
}

ordered_json to_json(const FluxPoint &flux) {
    ordered_json j = ordered_json::object();
    for (const auto &[label, phi] : flux.biases) {
        j[label] = phi;
    }
    return j;
}

ordered_json to_json(const GateSpec &gate) {
    ordered_json j;
    j["pair"] = {gate.pair.first, gate.pair.second};
    j["coupler"] = gate.coupler;
    j["pulse"] = to_json(gate.pulse);
    j["compensations"] = ordered_json::array();
    for (const auto &c : gate.compensations) {
        j["compensations"].push_back({{"coupler", c.coupler}, {"amplitude", c.amplitude}});
    }
    return j;
}

namespace {

const json &field(const json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(where + ": missing key '" + key + "'");
    }
    return j[key];
}

double number(const json &j, const char *key, const std::string &where) {
    const json &v = field(j, key, where);
    if (!v.is_number()) {
        throw ValidationError(where + "." + key + ": expected a number");
    }
    return v.get<double>();
}

std::string text(const json &j, const char *key, const std::string &where) {
    const json &v = field(j, key, where);
    if (!v.is_string()) {
        throw ValidationError(where + "." + key + ": expected a string");
    }
    return v.get<std::string>();
}

}  // namespace

PulseShape pulse_from_json(const json &j, const std::string &where) {
    PulseShape p;
    p.amplitude = number(j, "amplitude", where);
    p.rise = number(j, "rise_ns", where);
    p.hold = j.contains("hold_ns") ? number(j, "hold_ns", where) : 0.0;
    if (!(p.rise > 0) || p.hold < 0) {
        throw ValidationError(where + ": rise must be > 0 and hold >= 0");
    }
    return p;
}

FluxPoint flux_from_json(const json &j, const std::string &where) {
    if (!j.is_object()) {
        throw ValidationError(where + ": expected an object of coupler biases");
    }
    FluxPoint f;
    for (const auto &[label, phi] : j.items()) {
        if (!phi.is_number()) {
            throw ValidationError(where + "." + label + ": expected a number");
        }
        f.biases[label] = phi.get<double>();
    }
    return f;
}

GateSpec gate_spec_from_json(const json &j, const std::string &where) {
    GateSpec g;
    const json &pair = field(j, "pair", where);
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw ValidationError(where + ".pair: expected two labels");
    }
    g.pair = {pair[0].get<std::string>(), pair[1].get<std::string>()};
    g.coupler = text(j, "coupler", where);
    g.pulse = pulse_from_json(field(j, "pulse", where), where + ".pulse");
    if (j.contains("compensations")) {
        const json &list = j["compensations"];
        if (!list.is_array()) {
            throw ValidationError(where + ".compensations: expected a list");
        }
        for (size_t k = 0; k < list.size(); k++) {
            std::string at = where + ".compensations[" + std::to_string(k) + "]";
            g.compensations.push_back(Compensation{text(list[k], "coupler", at), number(list[k], "amplitude", at)});
        }
    }
    return g;
}

GateReport gate_report_from_json(const json &j) {
    try {
        GateReport r;
        r.pair = {j.at("pair").at(0).get<std::string>(), j.at("pair").at(1).get<std::string>()};
        r.fidelity_avg = j.at("fidelity_avg").get<double>();
        r.spectator_ground_fidelity = j.at("spectator_ground_fidelity").get<double>();
        r.worst_case_fidelity = j.at("worst_case_fidelity").get<double>();
        r.leakage = j.at("leakage").get<double>();
        for (const auto &[label, phase] : j.at("virtual_z").items()) {
            r.virtual_z[label] = phase.get<double>();
        }
        r.conditions = j.at("conditions").get<std::string>();
        return r;
    } catch (const json::exception &e) {
        throw ValidationError(std::string("gate report: ") + e.what());
    }
}

CompensationSetting compensation_from_json(const json &j) {
    try {
        CompensationSetting s;
        s.coupler = j.at("coupler").get<std::string>();
        s.amplitude = j.at("amplitude").get<double>();
        s.tau_star = j.at("tau_star").get<double>();
        s.residual_transfer = j.at("residual_transfer").get<double>();
        s.uncompensated_transfer = j.value("uncompensated_transfer", 0.0);
        s.boundary_optimum = j.value("boundary_optimum", false);
        return s;
    } catch (const json::exception &e) {
        throw ValidationError(std::string("compensation setting: ") + e.what());
    }
}

std::string dump(const ordered_json &j) {
    return j.dump(2) + "\n";
}

}  // namespace spectator
