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

#include "irs/opt_single.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "irs/error.hpp"
#include "irs/power.hpp"

namespace irs {

SingleOptimum joint_optimum_single(const ScenarioConfig& cfg) {
    const double D = cfg.link_distance_m();
    const double d_min = two_ray_min_path_length(cfg);
    SingleOptimum out;
    out.x_m = 0.5 * D;
    out.theta = wrap_phase(cfg.wavenumber() * (d_min - D));
    out.power_w = received_power_tractable_single(out.x_m, out.theta, cfg);
    return out;
}

Polynomial compose_cos_polynomial(double theta_eff, const ScenarioConfig& cfg, const CosineFit& fit) {
    const double k = cfg.wavenumber();
    const Polynomial z = Polynomial::linear(k, -theta_eff - k * cfg.link_distance_m());
    const Polynomial z2 = z * z;
    return fit.q4 * (z2 * z2) + fit.q2 * z2 + Polynomial{fit.q0};
}

Polynomial stationarity_quintic(double theta_eff, const ScenarioConfig& cfg, const CosineFit& fit) {
    const Polynomial p = compose_cos_polynomial(theta_eff, cfg, fit);
    const Polynomial d = Polynomial::monomial(1);
    return d * d * p.derivative() - d * p -
           Polynomial{cfg.reflection_coeff() * cfg.link_distance_m()};
}

OptimizationOutcome optimal_location_fixed_phase(double theta, const ScenarioConfig& cfg, const CosineFit& fit) {
    if (!(theta >= 0.0 && theta < kTwoPi)) {
        throw Error(ErrorCode::OutOfRange, "fixed phase must lie in [0, 2pi)");
    }
    const double k = cfg.wavenumber();
    const double D = cfg.link_distance_m();
    const double d_min = two_ray_min_path_length(cfg);
    const double d_max = two_ray_max_path_length(cfg);
    const double offset = theta + k * D; // z = k d - offset
    const double half_pi = 0.5 * std::numbers::pi;

    const long first = static_cast<long>(std::ceil((k * d_min - offset - half_pi) / kTwoPi));
    const long last = static_cast<long>(std::floor((k * d_max - offset + half_pi) / kTwoPi));
    if (first > last) throw Error(ErrorCode::NoFeasibleBranch, "no z window meets the reachable path range");

    OptimizationOutcome out;
    out.optimizer = "polynomial-fit location search";
    out.theta = theta;

    const auto push = [&](double d, long branch, bool stationary) {
        QuinticCandidate c;
        c.d_root_m = std::clamp(d, d_min, d_max);
        c.branch = branch;
        c.stationary = stationary;
        c.power_w = received_power_at_path(c.d_root_m, theta, cfg);
        c.x_pair = location_from_path_length(c.d_root_m, cfg);
        out.candidates.push_back(c);
    };

    for (long m = first; m <= last; ++m) {
        const double center = offset + kTwoPi * static_cast<double>(m);
        const double lo = std::max(d_min, (center - half_pi) / k);
        const double hi = std::min(d_max, (center + half_pi) / k);
        if (lo > hi) continue;
        push(lo, m, false);
        if (cfg.reflection_coeff() > 0.0) {
            const Polynomial quintic = stationarity_quintic(theta + kTwoPi * static_cast<double>(m), cfg, fit);
            for (double r : quintic.real_roots_in(lo, hi)) push(r, m, true);
        }
        push(hi, m, false);
    }
    // Domain ends may fall in half periods no window covers.
    push(d_min, first, false);
    push(d_max, last, false);

    // Lowest branch, then smaller d, wins ties.
    const QuinticCandidate* best = nullptr;
    for (const auto& c : out.candidates) {
        if (best == nullptr || c.power_w > best->power_w ||
            (c.power_w == best->power_w &&
             (c.branch < best->branch || (c.branch == best->branch && c.d_root_m < best->d_root_m)))) {
            best = &c;
        }
    }
    out.path_m = best->d_root_m;
    out.power_w = best->power_w;
    out.x_pair = best->x_pair;
    out.x_m = best->x_pair.near_m;
    return out;
}

SingleOptimum optimal_phase_fixed_location(double x_m, const ScenarioConfig& cfg) {
    const double d = two_ray_path_length(x_m, cfg);
    SingleOptimum out;
    out.x_m = x_m;
    out.theta = wrap_phase(cfg.wavenumber() * (d - cfg.link_distance_m()));
    out.power_w = received_power_tractable_single(x_m, out.theta, cfg);
    return out;
}

} // namespace irs
