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

#ifndef SPECTATOR_OPTIMIZE_HPP
#define SPECTATOR_OPTIMIZE_HPP

#include <functional>
#include <vector>

namespace spectator {

struct ScalarMinimum {
    double x = 0;
    double value = 0;
    int evaluations = 0;
};

/// Golden-section search for a minimum of a unimodal function on [lo, hi].
/// Stops once the bracket is narrower than `tol`.
ScalarMinimum golden_section_minimize(const std::function<double(double)> &f, double lo, double hi, double tol,
                                      int max_evaluations = 400);

/// Bisection on the sign of f between lo and hi. f_lo and f_hi are the known
/// endpoint values and must have opposite signs.
double bisect_sign_change(const std::function<double(double)> &f, double lo, double hi, double f_lo, double f_hi,
                          double tol, int max_iterations = 200);

/// Abscissa of the vertex of the parabola through three equally spaced
/// samples centered on x1. Falls back to x1 when the samples are collinear.
double parabolic_vertex(double x1, double step, double y0, double y1, double y2);

std::vector<double> linspace(double lo, double hi, int points);

}  // namespace spectator

#endif
