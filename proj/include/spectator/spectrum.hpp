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

#ifndef SPECTATOR_SPECTRUM_HPP
#define SPECTATOR_SPECTRUM_HPP

#include <vector>

namespace spectator {

struct PeakEstimate {
    double frequency = 0;  // GHz when dt is in ns
    double peak_to_peak = 0;
};

/// Dominant nonzero frequency of a uniformly sampled real signal: mean
/// removed, Hann window, zero padding, then a parabola through the largest
/// bin and its neighbours.
PeakEstimate dominant_frequency(const std::vector<double> &samples, double dt, int pad_factor = 8);

}  // namespace spectator

#endif
