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

#ifndef SPECTATOR_TESTS_HELPERS_HPP
#define SPECTATOR_TESTS_HELPERS_HPP

#include <string>

#include "spectator/device.hpp"

namespace testing_support {

inline spectator::TransmonSpec qubit(const std::string &label, double freq, double anh = -0.24, int levels = 0) {
    return spectator::TransmonSpec{label, freq, anh, false, 0.0, levels};
}

inline spectator::TransmonSpec coupler(const std::string &label, double omega_max, double anh = -0.24,
                                       double d = 0.0, int levels = 0) {
    return spectator::TransmonSpec{label, omega_max, anh, true, d, levels};
}

inline spectator::CouplingSpec link(const std::string &a, const std::string &b, double g,
                                    spectator::CouplingKind kind = spectator::CouplingKind::intended) {
    return spectator::CouplingSpec{a, b, g, kind};
}

inline std::string config_path(const std::string &name) {
    return std::string(SPECTATOR_CONFIG_DIR) + "/" + name;
}

}  // namespace testing_support

#endif
