// Copyright 2026 the qgsa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qgsa {

// The factored exponentials are pi-periodic in theta up to a global phase,
// so one period centered at zero is the natural default window.
struct ThetaGrid {
    double min = -std::numbers::pi / 2;
    double max = std::numbers::pi / 2;
    int points = 401;
};

struct ScanResult {
    double theta_star = 0.0;
    double value_star = 0.0;
    std::vector<std::pair<double, double>> curve;  // (theta, value) per grid point
};

/// Dense grid scan followed by golden-section refinement of the bracket
/// around the best grid point, down to |interval| < refine_tol.
inline ScanResult minimize_on_grid(const std::function<double(double)>& f,
                                   const ThetaGrid& grid, double refine_tol = 1e-8) {
    if (grid.points < 2 || !(grid.max > grid.min))
        throw std::invalid_argument("minimize_on_grid: bad grid");
    ScanResult res;
    res.curve.reserve(grid.points);
    const double step = (grid.max - grid.min) / (grid.points - 1);
    int best = 0;
    for (int i = 0; i < grid.points; ++i) {
        const double theta = grid.min + i * step;
        const double e = f(theta);
        res.curve.emplace_back(theta, e);
        if (e < res.curve[best].second) best = i;
    }

    double a = res.curve[std::max(0, best - 1)].first;
    double b = res.curve[std::min(grid.points - 1, best + 1)].first;
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > refine_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    res.theta_star = f1 <= f2 ? x1 : x2;
    res.value_star = std::min(f1, f2);
    if (res.curve[best].second < res.value_star) {
        res.theta_star = res.curve[best].first;
        res.value_star = res.curve[best].second;
    }
    return res;
}

}  // namespace qgsa
