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

#ifndef SPECTATOR_SERIALIZATION_HPP
#define SPECTATOR_SERIALIZATION_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "spectator/calibration.hpp"
#include "spectator/gate.hpp"

namespace spectator {

// Field names here are part of the output format; see README.

nlohmann::ordered_json to_json(const GateReport &report);
nlohmann::ordered_json to_json(const CompensationSetting &setting);
nlohmann::ordered_json to_json(const PulseShape &pulse);
nlohmann::ordered_json to_json(const FluxPoint &flux);

nlohmann::ordered_json to_json(const GateSpec &gate);

GateReport gate_report_from_json(const nlohmann::json &j);
PulseShape pulse_from_json(const nlohmann::json &j, const std::string &where);
FluxPoint flux_from_json(const nlohmann::json &j, const std::string &where);
/// {"pair": [a, b], "coupler": c, "pulse": {...}, "compensations": [{"coupler", "amplitude"}]}
GateSpec gate_spec_from_json(const nlohmann::json &j, const std::string &where);
CompensationSetting compensation_from_json(const nlohmann::json &j);

/// Two-space indented text with a trailing newline.
std::string dump(const nlohmann::ordered_json &j);

}  // namespace spectator

#endif
