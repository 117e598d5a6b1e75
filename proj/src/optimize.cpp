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

#include "spectator/optimize.hpp"

#include <cmath>

#include "spectator/errors.hpp"

namespace spectator {

ScalarMinimum golden_section_minimize(const std::function<double(double)> &f, double lo, double hi, double tol,
                                      int max_evaluations) {
    if (!(hi > lo)) {
        throw ValidationError("golden-section bracket is empty");
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int evals = 2;
    while (b - a > tol && evals < max_evaluations) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        evals++;
    }
    return fc <= fd ? ScalarMinimum{c, fc, evals} : ScalarMinimum{d, fd, evals};
}

double bisect_sign_change(const std::function<double(double)> &f, double lo, double hi, double f_lo, double f_hi,
                          double tol, int max_iterations) {
    if (f_lo == 0) {
        return lo;
    }
    if (f_hi == 0) {
        return hi;
    }
    if ((f_lo > 0) == (f_hi > 0)) {
        throw ValidationError("bisection endpoints do not bracket a sign change");
    }
    for (int it = 0; it < max_iterations && hi - lo > tol; it++) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0) {
            return mid;
        }
        if ((fm > 0) == (f_lo > 0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double parabolic_vertex(double x1, double step, double y0, double y1, double y2) {
    double curvature = y0 - 2 * y1 + y2;
    if (curvature == 0) {
        return x1;
    }
    double shift = 0.5 * (y0 - y2) / curvature;
    if (shift > 1) {
        shift = 1;
    } else if (shift < -1) {
        shift = -1;
    }
    return x1 + step * shift;
}

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 1) {
        throw ValidationError("sweep needs at least one point");
    }
    std::vector<double> out(static_cast<size_t>(points));
    if (points == 1) {
        out[0] = lo;
        return out;
    }
    for (int k = 0; k < points; k++) {
        out[static_cast<size_t>(k)] = lo + (hi - lo) * k / (points - 1);
    }
    return out;
}

}  // namespace spectator
