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

#ifndef SPECTATOR_DEVICE_HPP
#define SPECTATOR_DEVICE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace spectator {

/// One transmon mode. Tunable nodes are the couplers; their frequency
/// follows the SQUID flux map below.
struct TransmonSpec {
    std::string label;
    double omega_max = 0.0;      // GHz; fixed frequency for non-tunable nodes
    double anharmonicity = 0.0;  // GHz, signed
    bool tunable = false;
    double asymmetry_d = 0.0;
    int levels = 0;  // per-mode truncation override; 0 = global setting

    bool operator==(const TransmonSpec &) const = default;
};

enum class CouplingKind { intended, stray };

struct CouplingSpec {
    std::string node_a;
    std::string node_b;
    double g = 0.0;  // GHz
    CouplingKind kind = CouplingKind::intended;

    bool operator==(const CouplingSpec &) const = default;
};

/// Validated, immutable device description.
class DeviceGraph {
   public:
    DeviceGraph() = default;
    DeviceGraph(std::vector<TransmonSpec> nodes, std::vector<CouplingSpec> couplings);

    const std::vector<TransmonSpec> &nodes() const {
        return nodes_;
    }
    const std::vector<CouplingSpec> &couplings() const {
        return couplings_;
    }
    size_t size() const {
        return nodes_.size();
    }
    bool contains(std::string_view label) const;
    /// Throws ValidationError naming the label when absent.
    size_t index_of(std::string_view label) const;
    const TransmonSpec &node(std::string_view label) const;

    bool operator==(const DeviceGraph &) const = default;

   private:
    std::vector<TransmonSpec> nodes_;
    std::vector<CouplingSpec> couplings_;
};

/// Static coupler biases in units of the flux quantum. Missing tunable
/// nodes sit at zero flux.
struct FluxPoint {
    std::map<std::string, double> biases;

    double at(const std::string &label) const;
    FluxPoint with(const std::string &label, double phi) const;

    bool operator==(const FluxPoint &) const = default;
};

/// omega_max * (cos^2(pi phi) + d^2 sin^2(pi phi))^(1/4).
double coupler_frequency(const TransmonSpec &spec, double phi);

/// Frequency of a node at the given bias (fixed nodes ignore the flux).
double node_frequency(const TransmonSpec &spec, const FluxPoint &flux);

/// Rejects bias keys that are not tunable nodes of the device.
void check_flux(const DeviceGraph &device, const FluxPoint &flux);

DeviceGraph load_device(std::string_view config_text);
DeviceGraph load_device_file(const std::string &path);
std::string emit_device(const DeviceGraph &device);

DeviceGraph without_stray_couplings(const DeviceGraph &device);
DeviceGraph with_node_frequency(const DeviceGraph &device, std::string_view label, double omega_max);
/// Adds the coupling, or replaces the existing one on the same pair.
DeviceGraph with_coupling(const DeviceGraph &device, const CouplingSpec &coupling);

}  // namespace spectator

#endif
