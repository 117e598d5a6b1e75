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

#ifndef SPECTATOR_TOOLS_CLI_SUPPORT_HPP
#define SPECTATOR_TOOLS_CLI_SUPPORT_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spectator/device.hpp"
#include "spectator/schedule.hpp"
#include "spectator/static_analysis.hpp"

namespace spectator::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitPhysics = 3;
inline constexpr int kExitIo = 4;

/// Writes through a temporary file in the same directory, then renames.
void atomic_write(const std::string &path, const std::string &content);

/// "C01=0.3,C14=0.32"
FluxPoint parse_flux(const std::string &text);
/// "Q0,Q1"
LabelPair parse_pair(const std::string &text);
/// "Q4=1,Q5=0"; empty text gives no spectators.
SpectatorState parse_spectator(const std::string &text);
/// "Q0,Q4"
std::vector<std::string> parse_labels(const std::string &text);
/// "C14=0.075:30:66.7,C34=..." as coupler=amplitude:rise_ns:hold_ns
std::map<std::string, PulseShape> parse_companions(const std::string &text);

struct RunManifest {
    std::string command;
    std::string device_file;
    std::map<std::string, std::string> parameters;
    long seed = 0;  // reserved; nothing here is random
    std::vector<std::string> output_paths;
    std::vector<std::string> argv;
};

/// <prefix>.manifest.json, written last.
std::string write_manifest(const std::string &prefix, const RunManifest &manifest);

/// Runs `body`, printing any error to stderr and mapping it to an exit code.
int run_guarded(const std::function<void()> &body);

}  // namespace spectator::cli

#endif
