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
#include <functional>

#include "irs/types.hpp"

namespace irs {

/// Evenly spaced samples of [lo, hi]; with include_hi = false the upper bound
/// is open (used for phase axes, where 2pi aliases 0).
struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t points = 2;
    bool include_hi = true;

    void validate() const;
    double step() const noexcept;
    double at(std::size_t index) const noexcept;
};

GridSpec location_grid(const ScenarioConfig& cfg, std::size_t points);
GridSpec phase_grid(std::size_t points);

struct GridOptimum2 {
    double x_m = 0.0;
    double theta = 0.0;
    double power_w = 0.0;
};

struct GridOptimum1 {
    double x_m = 0.0;
    double power_w = 0.0;
};

/// Exhaustive (x, theta) scan of the single-element power. Ties go to the
/// lowest x index, then the lowest theta index. workers == 0 picks the
/// hardware concurrency; the result is the same for any worker count.
GridOptimum2 grid_search_single(const ScenarioConfig& cfg, const GridSpec& x_grid, const GridSpec& theta_grid,
                                unsigned workers = 0);

/// Dense x scan of the single-element power at a fixed phase.
GridOptimum1 grid_search_single_location(const ScenarioConfig& cfg, double theta, const GridSpec& x_grid,
                                         unsigned workers = 0);

/// Phase-aligned multi-element power over x' (lowest index wins ties).
GridOptimum1 grid_search_multi_location(const PanelGeometry& panel_template, const ScenarioConfig& cfg,
                                        const GridSpec& x_grid, unsigned workers = 0);

struct Derivatives {
    double first = 0.0;
    double second = 0.0;
};

/// Central differences (f(a+h) - f(a-h)) / 2h and (f(a+h) - 2f(a) + f(a-h)) / h^2.
Derivatives finite_difference(const std::function<double(double)>& fn, double at, double h_step);

/// Evaluates fn(i) for i in [0, count) into out, split over workers in
/// contiguous chunks. Each slot is written by exactly one worker.
void parallel_fill(std::size_t count, unsigned workers, const std::function<double(std::size_t)>& fn,
                   double* out);

} // namespace irs
