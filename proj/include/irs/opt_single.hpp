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

#include <string>
#include <vector>

#include "irs/channel.hpp"
#include "irs/polynomial.hpp"
#include "irs/types.hpp"

namespace irs {

/// Even quartic approximation of cos(z) on [-pi/2, pi/2].
struct CosineFit {
    double q4 = 0.0259;
    double q2 = -0.4507;
    double q0 = 0.9772;

    static constexpr CosineFit canonical() noexcept { return {}; }
    double operator()(double z) const noexcept {
        const double z2 = z * z;
        return (q4 * z2 + q2) * z2 + q0;
    }
};

struct SingleOptimum {
    double x_m = 0.0;
    double theta = 0.0;
    double power_w = 0.0;
};

/// Candidate path length examined by the fixed-phase location search.
struct QuinticCandidate {
    double d_root_m = 0.0;
    long branch = 0; ///< z window [-pi/2 + 2 pi m, pi/2 + 2 pi m]
    bool stationary = false; ///< true for quintic roots, false for window/domain ends
    double power_w = 0.0;
    LocationPair x_pair{};
};

struct OptimizationOutcome {
    std::string optimizer;
    double x_m = 0.0;            ///< smaller of the two symmetric maximizers
    LocationPair x_pair{};
    double theta = 0.0;
    double path_m = 0.0;
    double power_w = 0.0;
    std::vector<QuinticCandidate> candidates;
};

/// x* = D/2 and theta* = wrap(k (d_min - D)).
SingleOptimum joint_optimum_single(const ScenarioConfig& cfg);

/// Expands q4 z^4 + q2 z^2 + q0 with z = k d - theta_eff - k D into powers of d.
Polynomial compose_cos_polynomial(double theta_eff, const ScenarioConfig& cfg,
                                  const CosineFit& fit = CosineFit::canonical());

/// Numerator of the derivative of the polynomial-cosine power in d after
/// clearing denominators: d^2 p'(d) - d p(d) - Gamma D. Has the sign of the
/// derivative for Gamma > 0.
Polynomial stationarity_quintic(double theta_eff, const ScenarioConfig& cfg,
                                const CosineFit& fit = CosineFit::canonical());

/// Best panel location for a fixed reflection phase.
///
/// The reachable path lengths [d_min, d_max] map to a z range; every half
/// period window [-pi/2 + 2 pi m, pi/2 + 2 pi m] overlapping it is solved with
/// the quartic cosine (valid only there) and the quintic stationarity
/// condition. Window ends and the domain ends are added as candidates so that
/// maxima in the uncovered half periods are not lost. All candidates are
/// scored with the exact cosine.
OptimizationOutcome optimal_location_fixed_phase(double theta, const ScenarioConfig& cfg,
                                                 const CosineFit& fit = CosineFit::canonical());

/// theta* = wrap(k (d(x) - D)) at a fixed location.
SingleOptimum optimal_phase_fixed_location(double x_m, const ScenarioConfig& cfg);

} // namespace irs
