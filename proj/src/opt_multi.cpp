// SPDX-License-Identifier: Apache-2.0
//
// irs-opt: IRS-assisted link power modelling and placement optimization
// Copyright (C) 2026 The irs-opt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irs/opt_multi.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "irs/channel.hpp"
#include "irs/error.hpp"
#include "irs/power.hpp"

namespace irs {

PhaseProfile optimal_phases(const PanelGeometry& panel, const ScenarioConfig& cfg) {
    std::vector<double> d = element_path_lengths(panel, cfg);
    const double k = cfg.wavenumber();
    const double D = cfg.link_distance_m();
    for (double& v : d) v = k * (v - D);
    return PhaseProfile(panel.rows(), panel.cols(), std::move(d));
}

double optimal_location_multi(const PanelGeometry& panel_template, const ScenarioConfig& cfg) {
    const double D = cfg.link_distance_m();
    const double x = 0.5 * D - (static_cast<double>(panel_template.cols()) - 1.0) * panel_template.half_width_m();
    if (!(x >= 0.0 && x <= D)) {
        std::ostringstream os;
        os << "closed-form location " << x << " m outside [0, " << D << "]";
        throw Error(ErrorCode::InfeasibleGeometry, os.str());
    }
    return x;
}

std::pair<double, ElementIndex> max_element_path(const PanelGeometry& panel, const ScenarioConfig& cfg) {
    double best = -std::numeric_limits<double>::infinity();
    ElementIndex at;
    for (std::size_t i = 0; i < panel.rows(); ++i) {
        for (std::size_t j = 0; j < panel.cols(); ++j) {
            const double d = element_path_length(i, j, panel, cfg);
            if (d > best) {
                best = d;
                at = {i, j};
            }
        }
    }
    return {best, at};
}

MinimaxResult minimax_path_oracle(const PanelGeometry& panel_template, const ScenarioConfig& cfg,
                                  std::size_t grid_points) {
    if (grid_points < 2) throw Error(ErrorCode::InvalidArgument, "minimax oracle needs >= 2 grid points");
    const double D = cfg.link_distance_m();
    MinimaxResult best;
    best.t_best_m = std::numeric_limits<double>::infinity();
    // max_ij d_ij only involves the top row's extreme columns, but the oracle
    // deliberately scans the whole panel.
    for (std::size_t g = 0; g < grid_points; ++g) {
        const double x = D * static_cast<double>(g) / static_cast<double>(grid_points - 1);
        const auto [t, at] = max_element_path(panel_template.moved_to(x), cfg);
        if (t < best.t_best_m) best = {x, t, at};
    }
    return best;
}

MultiOptOutcome joint_optimum_multi(const PanelGeometry& panel_template, const ScenarioConfig& cfg) {
    const double x = optimal_location_multi(panel_template, cfg);
    const PanelGeometry placed = panel_template.moved_to(x);
    const auto [t, at] = max_element_path(placed, cfg);
    return {x, optimal_phases(placed, cfg), received_power_opt_phase_multi(placed, cfg), t, at};
}

std::vector<double> gradient_from_paths(std::span<const double> paths_m, const ScenarioConfig& cfg) {
    std::vector<double> inv(paths_m.size());
    for (std::size_t e = 0; e < paths_m.size(); ++e) inv[e] = 1.0 / paths_m[e];
    const double g = cfg.reflection_coeff();
    const double amplitude = 1.0 / cfg.link_distance_m() + g * pairwise_sum(inv);
    // d/dd_ij of scale * amplitude^2 = -2 scale Gamma amplitude / d_ij^2
    // = -(2/d^3) (Gamma + d/D + sum_{mn != ij} Gamma d/d_mn) * scale * Gamma.
    std::vector<double> grad(paths_m.size());
    for (std::size_t e = 0; e < paths_m.size(); ++e) {
        grad[e] = -2.0 * cfg.link_scale() * g * amplitude * inv[e] * inv[e];
    }
    return grad;
}

std::vector<double> gradient_wrt_paths(const PanelGeometry& panel, const ScenarioConfig& cfg) {
    return gradient_from_paths(element_path_lengths(panel, cfg), cfg);
}

} // namespace irs
