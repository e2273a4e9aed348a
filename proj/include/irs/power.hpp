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
#include <vector>

#include "irs/types.hpp"

namespace irs {

/// Received power split into the terms of the expanded (interference) form.
/// Every entry already carries the link scale P_t * (lambda / 4 pi)^2.
struct PowerResult {
    double total_w = 0.0;
    double direct_term_w = 0.0;                ///< 1 / D^2
    std::vector<double> element_self_terms_w;  ///< Gamma^2 / d_ij^2, row-major
    std::vector<double> direct_cross_terms_w;  ///< 2 Gamma / (D d_ij) cos(k d_ij - theta_ij - k D)
    double element_cross_terms_w = 0.0;        ///< sum over ordered pairs (ij) != (mn)
};

/// Fixed-topology pairwise summation; result does not depend on thread count.
double pairwise_sum(std::span<const double> values) noexcept;

// ---- single element ------------------------------------------------------

/// |e^{-jkD}/D + (Gamma/d) e^{j theta} e^{-jkd}|^2, scaled.
double received_power_complex_single(double x_m, double theta, const ScenarioConfig& cfg);

/// 1/D^2 + Gamma^2/d^2 + 2 Gamma/(d D) cos(kd - theta - kD), scaled.
double received_power_tractable_single(double x_m, double theta, const ScenarioConfig& cfg);

/// Same as the tractable form but parameterised by the reflected path length.
double received_power_at_path(double path_m, double theta, const ScenarioConfig& cfg) noexcept;

// ---- multiple elements ---------------------------------------------------

double received_power_complex_multi(const PanelGeometry& panel, const PhaseProfile& phases,
                                    const ScenarioConfig& cfg);

PowerResult received_power_tractable_multi(const PanelGeometry& panel, const PhaseProfile& phases,
                                           const ScenarioConfig& cfg);

/// Power with every element phase-aligned: (1/D + Gamma * sum 1/d_ij)^2, scaled.
double received_power_opt_phase_multi(const PanelGeometry& panel, const ScenarioConfig& cfg);

/// Phase-aligned power from explicit path lengths. Lets tests move a single
/// d_ij without dragging the rest of the geometry along.
double received_power_opt_phase_from_paths(std::span<const double> paths_m, const ScenarioConfig& cfg);

/// Complex-form power from explicit path lengths and row-major phases.
double received_power_complex_from_paths(std::span<const double> paths_m, std::span<const double> phases,
                                         const ScenarioConfig& cfg);

} // namespace irs
