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

#include "irs/power.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "irs/channel.hpp"
#include "irs/error.hpp"

namespace irs {

double pairwise_sum(std::span<const double> values) noexcept {
    if (values.size() <= 8) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

using cplx = std::complex<double>;

cplx direct_field(const ScenarioConfig& cfg) {
    const double D = cfg.link_distance_m();
    return std::polar(1.0 / D, -cfg.wavenumber() * D);
}

void check_dims(const PanelGeometry& panel, const PhaseProfile& phases) {
    if (panel.rows() != phases.rows() || panel.cols() != phases.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "phase profile " + std::to_string(phases.rows()) + " x " + std::to_string(phases.cols()) +
                        " does not match panel " + std::to_string(panel.rows()) + " x " +
                        std::to_string(panel.cols()));
    }
}

} // namespace

double received_power_complex_single(double x_m, double theta, const ScenarioConfig& cfg) {
    const double d = two_ray_path_length(x_m, cfg);
    const cplx field =
        direct_field(cfg) + std::polar(cfg.reflection_coeff() / d, theta - cfg.wavenumber() * d);
    return cfg.link_scale() * std::norm(field);
}

double received_power_tractable_single(double x_m, double theta, const ScenarioConfig& cfg) {
    return received_power_at_path(two_ray_path_length(x_m, cfg), theta, cfg);
}

double received_power_at_path(double path_m, double theta, const ScenarioConfig& cfg) noexcept {
    const double D = cfg.link_distance_m();
    const double g = cfg.reflection_coeff();
    const double k = cfg.wavenumber();
    const double d = path_m;
    return cfg.link_scale() *
           (1.0 / (D * D) + g * g / (d * d) + 2.0 * g / (d * D) * std::cos(k * d - theta - k * D));
}

double received_power_complex_from_paths(std::span<const double> paths_m, std::span<const double> phases,
                                         const ScenarioConfig& cfg) {
    if (paths_m.size() != phases.size()) {
        throw Error(ErrorCode::DimensionMismatch, "paths and phases differ in length");
    }
    const double k = cfg.wavenumber();
    const double g = cfg.reflection_coeff();
    // Accumulate the full field before squaring, row-major.
    cplx field = direct_field(cfg);
    for (std::size_t e = 0; e < paths_m.size(); ++e) {
        field += std::polar(g / paths_m[e], phases[e] - k * paths_m[e]);
    }
    return cfg.link_scale() * std::norm(field);
}

double received_power_complex_multi(const PanelGeometry& panel, const PhaseProfile& phases,
                                    const ScenarioConfig& cfg) {
    check_dims(panel, phases);
    const std::vector<double> d = element_path_lengths(panel, cfg);
    return received_power_complex_from_paths(d, phases.values(), cfg);
}

PowerResult received_power_tractable_multi(const PanelGeometry& panel, const PhaseProfile& phases,
                                           const ScenarioConfig& cfg) {
    check_dims(panel, phases);
    const std::vector<double> d = element_path_lengths(panel, cfg);
    const std::span<const double> theta = phases.values();
    const double scale = cfg.link_scale();
    const double D = cfg.link_distance_m();
    const double g = cfg.reflection_coeff();
    const double k = cfg.wavenumber();
    const std::size_t n = d.size();

    PowerResult r;
    r.direct_term_w = scale / (D * D);
    r.element_self_terms_w.resize(n);
    r.direct_cross_terms_w.resize(n);

    // Residual phase of each reflected ray relative to the direct ray.
    std::vector<double> residual(n);
    for (std::size_t e = 0; e < n; ++e) {
        residual[e] = k * d[e] - theta[e] - k * D;
        r.element_self_terms_w[e] = scale * g * g / (d[e] * d[e]);
        r.direct_cross_terms_w[e] = scale * 2.0 * g / (D * d[e]) * std::cos(residual[e]);
    }

    // The ordered-pair double sum visits each unordered pair twice with equal
    // cosines; sum unordered pairs and double. Per ordered pair the weight is
    // Gamma^2 / (d_ij d_mn), so each unordered pair carries 2 Gamma^2 / (d d').
    std::vector<double> row_sums(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        double acc = 0.0;
        for (std::size_t b = a + 1; b < n; ++b) {
            acc += std::cos(theta[a] - k * d[a] - theta[b] + k * d[b]) / (d[a] * d[b]);
        }
        row_sums[a] = acc;
    }
    r.element_cross_terms_w = scale * 2.0 * g * g * pairwise_sum(row_sums);

    r.total_w = r.direct_term_w + pairwise_sum(r.element_self_terms_w) + pairwise_sum(r.direct_cross_terms_w) +
                r.element_cross_terms_w;
    return r;
}

double received_power_opt_phase_from_paths(std::span<const double> paths_m, const ScenarioConfig& cfg) {
    std::vector<double> inv(paths_m.size());
    for (std::size_t e = 0; e < paths_m.size(); ++e) inv[e] = 1.0 / paths_m[e];
    const double amplitude = 1.0 / cfg.link_distance_m() + cfg.reflection_coeff() * pairwise_sum(inv);
    return cfg.link_scale() * amplitude * amplitude;
}

double received_power_opt_phase_multi(const PanelGeometry& panel, const ScenarioConfig& cfg) {
    return received_power_opt_phase_from_paths(element_path_lengths(panel, cfg), cfg);
}

} // namespace irs
