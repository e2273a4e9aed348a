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

#include "irs/oracle.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "irs/channel.hpp"
#include "irs/error.hpp"
#include "irs/power.hpp"

namespace irs {

void GridSpec::validate() const {
    if (points < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points");
    if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "grid needs lo < hi");
}

double GridSpec::step() const noexcept {
    const double intervals = static_cast<double>(include_hi ? points - 1 : points);
    return (hi - lo) / intervals;
}

double GridSpec::at(std::size_t index) const noexcept {
    if (include_hi && index + 1 == points) return hi;
    return lo + static_cast<double>(index) * step();
}

GridSpec location_grid(const ScenarioConfig& cfg, std::size_t points) {
    const GridSpec g{0.0, cfg.link_distance_m(), points, true};
    g.validate();
    return g;
}

GridSpec phase_grid(std::size_t points) {
    const GridSpec g{0.0, kTwoPi, points, false};
    g.validate();
    return g;
}

void parallel_fill(std::size_t count, unsigned workers, const std::function<double(std::size_t)>& fn,
                   double* out) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back([&fn, &errors, out, begin, end, w] {
                try {
                    for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

namespace {

void check_within(const GridSpec& grid, double lo, double hi, const char* axis) {
    if (grid.lo < lo || grid.hi > hi) {
        throw Error(ErrorCode::OutOfRange, std::string(axis) + " grid leaves its feasible range");
    }
}

// First index of the maximum.
std::size_t argmax(const std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[best]) best = i;
    }
    return best;
}

} // namespace

GridOptimum2 grid_search_single(const ScenarioConfig& cfg, const GridSpec& x_grid, const GridSpec& theta_grid,
                                unsigned workers) {
    x_grid.validate();
    theta_grid.validate();
    check_within(x_grid, 0.0, cfg.link_distance_m(), "location");
    check_within(theta_grid, 0.0, kTwoPi, "phase");
    // Per x row: the best theta index. Rows are independent.
    std::vector<double> row_best(x_grid.points);
    std::vector<double> row_arg(x_grid.points);
    parallel_fill(
        x_grid.points, workers,
        [&](std::size_t ix) {
            const double d = two_ray_path_length(x_grid.at(ix), cfg);
            double best = received_power_at_path(d, theta_grid.at(0), cfg);
            std::size_t arg = 0;
            for (std::size_t it = 1; it < theta_grid.points; ++it) {
                const double p = received_power_at_path(d, theta_grid.at(it), cfg);
                if (p > best) {
                    best = p;
                    arg = it;
                }
            }
            row_arg[ix] = static_cast<double>(arg);
            return best;
        },
        row_best.data());
    const std::size_t ix = argmax(row_best);
    return {x_grid.at(ix), theta_grid.at(static_cast<std::size_t>(row_arg[ix])), row_best[ix]};
}

GridOptimum1 grid_search_single_location(const ScenarioConfig& cfg, double theta, const GridSpec& x_grid,
                                         unsigned workers) {
    x_grid.validate();
    check_within(x_grid, 0.0, cfg.link_distance_m(), "location");
    std::vector<double> p(x_grid.points);
    parallel_fill(
        x_grid.points, workers,
        [&](std::size_t ix) { return received_power_tractable_single(x_grid.at(ix), theta, cfg); }, p.data());
    const std::size_t ix = argmax(p);
    return {x_grid.at(ix), p[ix]};
}

GridOptimum1 grid_search_multi_location(const PanelGeometry& panel_template, const ScenarioConfig& cfg,
                                        const GridSpec& x_grid, unsigned workers) {
    x_grid.validate();
    check_within(x_grid, 0.0, cfg.link_distance_m(), "location");
    std::vector<double> p(x_grid.points);
    parallel_fill(
        x_grid.points, workers,
        [&](std::size_t ix) {
            return received_power_opt_phase_multi(panel_template.moved_to(x_grid.at(ix)), cfg);
        },
        p.data());
    const std::size_t ix = argmax(p);
    return {x_grid.at(ix), p[ix]};
}

Derivatives finite_difference(const std::function<double(double)>& fn, double at, double h_step) {
    if (!(h_step > 0.0)) throw Error(ErrorCode::InvalidArgument, "finite difference step must be > 0");
    const double fp = fn(at + h_step);
    const double f0 = fn(at);
    const double fm = fn(at - h_step);
    return {(fp - fm) / (2.0 * h_step), (fp - 2.0 * f0 + fm) / (h_step * h_step)};
}

} // namespace irs
