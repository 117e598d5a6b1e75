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

#include "spectator/device.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spectator/errors.hpp"

namespace spectator {

namespace {

std::string pair_key(const std::string &a, const std::string &b) {
    return a < b ? a + "\x1f" + b : b + "\x1f" + a;
}

void validate_node(const TransmonSpec &n, const std::string &where) {
    if (n.label.empty()) {
        throw ValidationError(where + ".label: empty label");
    }
    if (!std::isfinite(n.omega_max) || n.omega_max <= 0) {
        throw ValidationError(where + ".omega_max_ghz: must be > 0 (node '" + n.label + "')");
    }
    if (!std::isfinite(n.anharmonicity) || std::abs(n.anharmonicity) >= n.omega_max) {
        throw ValidationError(
            where + ".anharmonicity_ghz: |anharmonicity| must be below omega_max (node '" + n.label + "')");
    }
    if (!(n.asymmetry_d >= 0 && n.asymmetry_d <= 1)) {
        throw ValidationError(where + ".asymmetry_d: must lie in [0, 1] (node '" + n.label + "')");
    }
    if (n.levels != 0 && n.levels < 2) {
        throw ValidationError(where + ".levels: must be >= 2 (node '" + n.label + "')");
    }
}

}  // namespace

DeviceGraph::DeviceGraph(std::vector<TransmonSpec> nodes, std::vector<CouplingSpec> couplings)
    : nodes_(std::move(nodes)), couplings_(std::move(couplings)) {
    std::set<std::string> seen;
    for (size_t k = 0; k < nodes_.size(); k++) {
        std::string where = "nodes[" + std::to_string(k) + "]";
        validate_node(nodes_[k], where);
        if (!seen.insert(nodes_[k].label).second) {
            throw ValidationError(where + ".label: duplicate label '" + nodes_[k].label + "'");
        }
    }
    std::set<std::string> pairs;
    for (size_t k = 0; k < couplings_.size(); k++) {
        const auto &c = couplings_[k];
        std::string where = "couplings[" + std::to_string(k) + "]";
        if (!seen.count(c.node_a)) {
            throw ValidationError(where + ".a: unknown node label '" + c.node_a + "'");
        }
        if (!seen.count(c.node_b)) {
            throw ValidationError(where + ".b: unknown node label '" + c.node_b + "'");
        }
        if (c.node_a == c.node_b) {
            throw ValidationError(where + ": node couples to itself ('" + c.node_a + "')");
        }
        if (!std::isfinite(c.g)) {
            throw ValidationError(where + ".g_ghz: not a finite number");
        }
        if (!pairs.insert(pair_key(c.node_a, c.node_b)).second) {
            throw ValidationError(
                where + ": second coupling between '" + c.node_a + "' and '" + c.node_b + "'");
        }
    }
}

bool DeviceGraph::contains(std::string_view label) const {
    return std::any_of(nodes_.begin(), nodes_.end(), [&](const TransmonSpec &n) { return n.label == label; });
}

size_t DeviceGraph::index_of(std::string_view label) const {
    for (size_t k = 0; k < nodes_.size(); k++) {
        if (nodes_[k].label == label) {
            return k;
        }
    }
    throw ValidationError("unknown node label '" + std::string(label) + "'");
}

const TransmonSpec &DeviceGraph::node(std::string_view label) const {
    return nodes_[index_of(label)];
}

double FluxPoint::at(const std::string &label) const {
    auto it = biases.find(label);
    return it == biases.end() ? 0.0 : it->second;
}

FluxPoint FluxPoint::with(const std::string &label, double phi) const {
    FluxPoint out = *this;
    out.biases[label] = phi;
    return out;
}

double coupler_frequency(const TransmonSpec &spec, double phi) {
    if (!spec.tunable) {
        throw ValidationError("coupler_frequency called on fixed-frequency node '" + spec.label + "'");
    }
    double c = std::cos(std::numbers::pi * phi);
    double s = std::sin(std::numbers::pi * phi);
    double d = spec.asymmetry_d;
    return spec.omega_max * std::pow(c * c + d * d * s * s, 0.25);
}

double node_frequency(const TransmonSpec &spec, const FluxPoint &flux) {
    return spec.tunable ? coupler_frequency(spec, flux.at(spec.label)) : spec.omega_max;
}

void check_flux(const DeviceGraph &device, const FluxPoint &flux) {
    for (const auto &[label, phi] : flux.biases) {
        if (!device.contains(label)) {
            throw ValidationError("flux bias for unknown node '" + label + "'");
        }
        if (!device.node(label).tunable) {
            throw ValidationError("flux bias given for fixed-frequency node '" + label + "'");
        }
        if (!std::isfinite(phi)) {
            throw ValidationError("flux bias for '" + label + "' is not finite");
        }
    }
}

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, size_t byte) {
    size_t line = 1;
    size_t col = 1;
    for (size_t k = 0; k < byte && k < text.size(); k++) {
        if (text[k] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ValidationError(where + ": unknown key '" + it.key() + "'");
        }
    }
}

const json &require(const json &obj, const char *key, const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError(where + ": missing key '" + key + "'");
    }
    return *it;
}

double number(const json &obj, const char *key, const std::string &where) {
    const json &v = require(obj, key, where);
    if (!v.is_number()) {
        throw ValidationError(where + "." + key + ": expected a number");
    }
    return v.get<double>();
}

std::string text(const json &obj, const char *key, const std::string &where) {
    const json &v = require(obj, key, where);
    if (!v.is_string()) {
        throw ValidationError(where + "." + key + ": expected a string");
    }
    return v.get<std::string>();
}

}  // namespace

DeviceGraph load_device(std::string_view config_text) {
    json root;
    try {
        root = json::parse(config_text.begin(), config_text.end());
    } catch (const json::parse_error &e) {
        size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw ValidationError("device config parse error at " + line_col(config_text, at) + ": " + e.what());
    }
    if (!root.is_object()) {
        throw ValidationError("device config: top level must be an object");
    }
    reject_unknown(root, {"nodes", "couplings"}, "device config");
    const json &jn = require(root, "nodes", "device config");
    if (!jn.is_array()) {
        throw ValidationError("nodes: expected a list");
    }
    std::vector<TransmonSpec> nodes;
    for (size_t k = 0; k < jn.size(); k++) {
        std::string where = "nodes[" + std::to_string(k) + "]";
        const json &o = jn[k];
        if (!o.is_object()) {
            throw ValidationError(where + ": expected an object");
        }
        reject_unknown(o, {"label", "omega_max_ghz", "anharmonicity_ghz", "tunable", "asymmetry_d", "levels"}, where);
        TransmonSpec n;
        n.label = text(o, "label", where);
        n.omega_max = number(o, "omega_max_ghz", where);
        n.anharmonicity = number(o, "anharmonicity_ghz", where);
        if (o.contains("tunable")) {
            if (!o["tunable"].is_boolean()) {
                throw ValidationError(where + ".tunable: expected true or false");
            }
            n.tunable = o["tunable"].get<bool>();
        }
        if (o.contains("asymmetry_d")) {
            n.asymmetry_d = number(o, "asymmetry_d", where);
        }
        if (o.contains("levels")) {
            if (!o["levels"].is_number_integer()) {
                throw ValidationError(where + ".levels: expected an integer");
            }
            n.levels = o["levels"].get<int>();
        }
        nodes.push_back(std::move(n));
    }
    std::vector<CouplingSpec> couplings;
    if (root.contains("couplings")) {
        const json &jc = root["couplings"];
        if (!jc.is_array()) {
            throw ValidationError("couplings: expected a list");
        }
        for (size_t k = 0; k < jc.size(); k++) {
            std::string where = "couplings[" + std::to_string(k) + "]";
            const json &o = jc[k];
            if (!o.is_object()) {
                throw ValidationError(where + ": expected an object");
            }
            reject_unknown(o, {"a", "b", "g_ghz", "kind"}, where);
            CouplingSpec c;
            c.node_a = text(o, "a", where);
            c.node_b = text(o, "b", where);
            c.g = number(o, "g_ghz", where);
            if (o.contains("kind")) {
                std::string kind = text(o, "kind", where);
                if (kind == "intended") {
                    c.kind = CouplingKind::intended;
                } else if (kind == "stray") {
                    c.kind = CouplingKind::stray;
                } else {
                    throw ValidationError(where + ".kind: expected 'intended' or 'stray', got '" + kind + "'");
                }
            }
            couplings.push_back(std::move(c));
        }
    }
    return DeviceGraph(std::move(nodes), std::move(couplings));
}

DeviceGraph load_device_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open device file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return load_device(buf.str());
    } catch (const ValidationError &e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string emit_device(const DeviceGraph &device) {
    json root;
    root["nodes"] = json::array();
    for (const auto &n : device.nodes()) {
        json o;
        o["label"] = n.label;
        o["omega_max_ghz"] = n.omega_max;
        o["anharmonicity_ghz"] = n.anharmonicity;
        o["tunable"] = n.tunable;
        o["asymmetry_d"] = n.asymmetry_d;
        if (n.levels != 0) {
            o["levels"] = n.levels;
        }
        root["nodes"].push_back(o);
    }
    root["couplings"] = json::array();
    for (const auto &c : device.couplings()) {
        json o;
        o["a"] = c.node_a;
        o["b"] = c.node_b;
        o["g_ghz"] = c.g;
        o["kind"] = c.kind == CouplingKind::stray ? "stray" : "intended";
        root["couplings"].push_back(o);
    }
    return root.dump(2) + "\n";
}

DeviceGraph without_stray_couplings(const DeviceGraph &device) {
    std::vector<CouplingSpec> kept;
    for (const auto &c : device.couplings()) {
        if (c.kind != CouplingKind::stray) {
            kept.push_back(c);
        }
    }
    return DeviceGraph(device.nodes(), kept);
}

DeviceGraph with_node_frequency(const DeviceGraph &device, std::string_view label, double omega_max) {
    auto nodes = device.nodes();
    nodes[device.index_of(label)].omega_max = omega_max;
    return DeviceGraph(nodes, device.couplings());
}

DeviceGraph with_coupling(const DeviceGraph &device, const CouplingSpec &coupling) {
    auto couplings = device.couplings();
    std::string key = pair_key(coupling.node_a, coupling.node_b);
    auto it = std::find_if(couplings.begin(), couplings.end(), [&](const CouplingSpec &c) {
        return pair_key(c.node_a, c.node_b) == key;
    });
    if (it != couplings.end()) {
        *it = coupling;
    } else {
        couplings.push_back(coupling);
    }
    return DeviceGraph(device.nodes(), couplings);
}

}  // namespace spectator
