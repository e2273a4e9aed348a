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

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "irs/types.hpp"

namespace irs {

struct ElementIndex {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const ElementIndex&, const ElementIndex&) = default;
};

struct MultiOptOutcome {
    double x_star_m = 0.0;
    PhaseProfile phases_star;
    double power_w = 0.0;
    double max_path_m = 0.0;     ///< minimax objective at x_star_m
    ElementIndex argmax_element; ///< element attaining max_path_m
};

/// theta_ij = wrap(k (d_ij - D)); aligns every reflected ray with the direct one.
PhaseProfile optimal_phases(const PanelGeometry& panel, const ScenarioConfig& cfg);

/// x'* = D/2 - (N - 1) a. Throws InfeasibleGeometry outside [0, D].
double optimal_location_multi(const PanelGeometry& panel_template, const ScenarioConfig& cfg);

struct MinimaxResult {
    double x_best_m = 0.0;
    double t_best_m = 0.0;
    ElementIndex argmax_element;
};

/// Largest element path length and the element attaining it.
std::pair<double, ElementIndex> max_element_path(const PanelGeometry& panel, const ScenarioConfig& cfg);

/// Grid search of x' on [0, D] for min over x' of max_ij d_ij(x').
MinimaxResult minimax_path_oracle(const PanelGeometry& panel_template, const ScenarioConfig& cfg,
                                  std::size_t grid_points);

/// Closed-form location, aligned phases there, and the resulting power.
MultiOptOutcome joint_optimum_multi(const PanelGeometry& panel_template, const ScenarioConfig& cfg);

/// d P / d d_ij of the phase-aligned power, row-major. Every entry is negative.
std::vector<double> gradient_wrt_paths(const PanelGeometry& panel, const ScenarioConfig& cfg);

/// Same gradient for explicit path lengths.
std::vector<double> gradient_from_paths(std::span<const double> paths_m, const ScenarioConfig& cfg);

} // namespace irs
