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

#include "spectator/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include "spectator/errors.hpp"
#include "spectator/optimize.hpp"

namespace spectator {

namespace {
// FFTW's planner is not re-entrant.
std::mutex planner_mutex;
}  // namespace

PeakEstimate dominant_frequency(const std::vector<double> &samples, double dt, int pad_factor) {
    const size_t n = samples.size();
    if (n < 8 || !(dt > 0)) {
        throw ValidationError("spectrum needs at least 8 samples and dt > 0");
    }
    auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    double mean = 0;
    for (double s : samples) {
        mean += s;
    }
    mean /= static_cast<double>(n);

    size_t padded = 1;
    while (padded < n * static_cast<size_t>(std::max(pad_factor, 1))) {
        padded <<= 1;
    }
    size_t bins = padded / 2 + 1;
    double *in = fftw_alloc_real(padded);
    fftw_complex *out = fftw_alloc_complex(bins);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(padded), in, out, FFTW_ESTIMATE);
    }
    for (size_t k = 0; k < padded; k++) {
        if (k < n) {
            double w = 0.5 * (1 - std::cos(2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n - 1)));
            in[k] = (samples[k] - mean) * w;
        } else {
            in[k] = 0;
        }
    }
    fftw_execute(plan);
    std::vector<double> mag(bins);
    for (size_t k = 0; k < bins; k++) {
        mag[k] = std::hypot(out[k][0], out[k][1]);
    }
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);

    // Skip the window's DC lobe: the first few padded bins.
    size_t start = std::max<size_t>(1, static_cast<size_t>(2 * padded / n));
    size_t best = start;
    for (size_t k = start; k + 1 < bins; k++) {
        if (mag[k] > mag[best]) {
            best = k;
        }
    }
    double k_peak = static_cast<double>(best);
    if (best > 0 && best + 1 < bins) {
        k_peak = parabolic_vertex(k_peak, 1.0, mag[best - 1], mag[best], mag[best + 1]);
    }
    return PeakEstimate{k_peak / (static_cast<double>(padded) * dt), *hi - *lo};
}

}  // namespace spectator
