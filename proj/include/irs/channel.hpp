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

#include <span>
#include <utility>
#include <vector>

#include "irs/types.hpp"

namespace irs {

// ---- reflection model ----------------------------------------------------

/// sigma(s); may be negative below the fit's positive root.
double rcs_from_area(double area_m2, const RcsFit& fit = RcsFit::canonical());

/// Gamma = sqrt(sigma(s)). Throws NegativeRcs where the fit is negative
/// (s below about 2.2043 m^2 for the canonical coefficients).
double reflection_coefficient_from_area(double area_m2, const RcsFit& fit = RcsFit::canonical());

struct AreaRcsPoint {
    double area_m2;
    double rcs_m2;
};

/// Least-squares quadratic through (area, rcs) samples. Needs at least three
/// distinct areas; throws DegenerateSystem otherwise.
RcsFit fit_rcs_quadratic(std::span<const AreaRcsPoint> points);

// ---- geometry ------------------------------------------------------------

/// Reflected path AP -> panel at (x, h) -> user, for 0 <= x <= D.
double two_ray_path_length(double x_m, const ScenarioConfig& cfg);

/// 2 * sqrt(h^2 + D^2 / 4), attained at x = D/2.
double two_ray_min_path_length(const ScenarioConfig& cfg);

/// Path length at either end of the link, h + sqrt(D^2 + h^2).
double two_ray_max_path_length(const ScenarioConfig& cfg);

double element_path_length(std::size_t i, std::size_t j, const PanelGeometry& panel,
                           const ScenarioConfig& cfg);

/// All d_ij in row-major order.
std::vector<double> element_path_lengths(const PanelGeometry& panel, const ScenarioConfig& cfg);

struct LocationPair {
    double near_m; ///< root at or left of D/2
    double far_m;  ///< mirror image about D/2
};

/// Inverts two_ray_path_length: the panel positions on [0, D] whose reflected
/// path equals d. Throws Infeasible if d < d_min or d exceeds the path at the
/// link ends.
LocationPair location_from_path_length(double path_m, const ScenarioConfig& cfg);

} // namespace irs
