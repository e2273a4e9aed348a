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

#include "irs/channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "irs/error.hpp"

namespace irs {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NegativeRcs: return "NegativeRcs";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::IndexOutOfBounds: return "IndexOutOfBounds";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InfeasibleGeometry: return "InfeasibleGeometry";
    case ErrorCode::NoFeasibleBranch: return "NoFeasibleBranch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

double wrap_phase(double radians) noexcept {
    double wrapped = radians - kTwoPi * std::floor(radians / kTwoPi);
    // floor() can leave exactly 2pi for tiny negative inputs
    if (wrapped >= kTwoPi || wrapped < 0.0) wrapped = 0.0;
    return wrapped;
}

// ---- ScenarioConfig ------------------------------------------------------

namespace {

void require(bool ok, const char* field, const char* what) {
    if (!ok) {
        throw Error(ErrorCode::ValidationError, std::string(field) + " " + what);
    }
}

} // namespace

ScenarioConfig::ScenarioConfig(const ScenarioParams& params) : params_(params) {
    const auto finite = [](double v) { return std::isfinite(v); };
    require(finite(params.transmit_power_w) && params.transmit_power_w > 0.0, "transmit_power_w",
            "must be > 0");
    require(finite(params.link_distance_m) && params.link_distance_m > 0.0, "link_distance_m",
            "must be > 0");
    require(finite(params.wavelength_m) && params.wavelength_m > 0.0, "wavelength_m", "must be > 0");
    require(finite(params.offset_height_m) && params.offset_height_m >= 0.0, "offset_height_m",
            "must be >= 0");
    require(finite(params.tx_gain) && params.tx_gain > 0.0, "tx_gain", "must be > 0");
    require(finite(params.rx_gain) && params.rx_gain > 0.0, "rx_gain", "must be > 0");
    require(params.tx_end_reflection >= 0.0 && params.tx_end_reflection <= 1.0, "tx_end_reflection",
            "must lie in [0, 1]");
    require(params.rx_end_reflection >= 0.0 && params.rx_end_reflection <= 1.0, "rx_end_reflection",
            "must lie in [0, 1]");

    if (params.reflection_coeff) {
        require(finite(*params.reflection_coeff) && *params.reflection_coeff >= 0.0,
                "reflection_coeff", "must be >= 0");
        reflection_coeff_ = *params.reflection_coeff;
    } else if (params.panel_area_m2) {
        require(finite(*params.panel_area_m2) && *params.panel_area_m2 > 0.0, "panel_area_m2",
                "must be > 0");
        reflection_coeff_ = reflection_coefficient_from_area(*params.panel_area_m2, params.rcs_fit);
    } else {
        throw Error(ErrorCode::ValidationError,
                    "reflection_coeff or panel_area_m2 must be provided");
    }

    wavenumber_ = kTwoPi / params.wavelength_m;
    const double friis = params.wavelength_m / (4.0 * std::numbers::pi);
    link_scale_ = params.transmit_power_w * params.tx_gain * params.rx_gain *
                  (1.0 - params.tx_end_reflection * params.tx_end_reflection) *
                  (1.0 - params.rx_end_reflection * params.rx_end_reflection) * friis * friis;
}

ScenarioConfig ScenarioConfig::single_element_defaults() { return ScenarioConfig(ScenarioParams{}); }

ScenarioConfig ScenarioConfig::multi_element_defaults() {
    ScenarioParams p;
    p.transmit_power_w = 10.0;
    p.link_distance_m = 100.0;
    p.wavelength_m = 0.12;
    p.offset_height_m = 25.0;
    p.panel_area_m2.reset();
    p.reflection_coeff = 0.5;
    return ScenarioConfig(p);
}

ScenarioConfig ScenarioConfig::with_reflection_coeff(double gamma) const {
    ScenarioParams p = params_;
    p.reflection_coeff = gamma;
    return ScenarioConfig(p);
}

ScenarioConfig ScenarioConfig::with_offset_height(double h) const {
    ScenarioParams p = params_;
    p.offset_height_m = h;
    return ScenarioConfig(p);
}

// ---- PanelGeometry / PhaseProfile ----------------------------------------

PanelGeometry::PanelGeometry(std::size_t rows, std::size_t cols, double half_width_m,
                             double corner_x_m, double lateral_offset_m, double corner_height_m)
    : rows_(rows), cols_(cols), half_width_m_(half_width_m), corner_x_m_(corner_x_m),
      lateral_offset_m_(lateral_offset_m), corner_height_m_(corner_height_m) {
    require(rows >= 1, "panel.rows", "must be >= 1");
    require(cols >= 1, "panel.cols", "must be >= 1");
    require(std::isfinite(half_width_m) && half_width_m > 0.0, "panel.half_width_m", "must be > 0");
    require(std::isfinite(corner_x_m), "panel.corner_x_m", "must be finite");
    require(std::isfinite(lateral_offset_m), "panel.lateral_offset_m", "must be finite");
    require(std::isfinite(corner_height_m), "panel.corner_height_m", "must be finite");
}

PanelGeometry PanelGeometry::multi_element_defaults() {
    return PanelGeometry(20, 20, 0.0075, 0.0, 0.5, 25.0);
}

Point3 PanelGeometry::element_center(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        std::ostringstream os;
        os << "element (" << i << ", " << j << ") outside " << rows_ << " x " << cols_ << " panel";
        throw Error(ErrorCode::IndexOutOfBounds, os.str());
    }
    const double a = half_width_m_;
    return {corner_x_m_ + (2.0 * static_cast<double>(j) + 1.0) * a, lateral_offset_m_,
            corner_height_m_ + (2.0 * static_cast<double>(i) + 1.0) * a};
}

PanelGeometry PanelGeometry::moved_to(double corner_x_m) const {
    return PanelGeometry(rows_, cols_, half_width_m_, corner_x_m, lateral_offset_m_, corner_height_m_);
}

PanelGeometry PanelGeometry::resized(std::size_t rows, std::size_t cols) const {
    return PanelGeometry(rows, cols, half_width_m_, corner_x_m_, lateral_offset_m_, corner_height_m_);
}

PanelGeometry PanelGeometry::with_half_width(double half_width_m) const {
    return PanelGeometry(rows_, cols_, half_width_m, corner_x_m_, lateral_offset_m_, corner_height_m_);
}

PhaseProfile::PhaseProfile(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows_ * cols_) {
        throw Error(ErrorCode::DimensionMismatch, "phase profile holds " + std::to_string(values_.size()) +
                                                      " values for a " + std::to_string(rows_) + " x " +
                                                      std::to_string(cols_) + " grid");
    }
    for (double& v : values_) v = wrap_phase(v);
}

PhaseProfile PhaseProfile::uniform(std::size_t rows, std::size_t cols, double radians) {
    return PhaseProfile(rows, cols, std::vector<double>(rows * cols, radians));
}

double PhaseProfile::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfBounds, "phase index out of range");
    return values_[i * cols_ + j];
}

PhaseProfile PhaseProfile::with(std::size_t i, std::size_t j, double radians) const {
    std::vector<double> v = values_;
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfBounds, "phase index out of range");
    v[i * cols_ + j] = radians;
    return PhaseProfile(rows_, cols_, std::move(v));
}

// ---- reflection model ----------------------------------------------------

double rcs_from_area(double area_m2, const RcsFit& fit) { return fit(area_m2); }

double reflection_coefficient_from_area(double area_m2, const RcsFit& fit) {
    const double sigma = rcs_from_area(area_m2, fit);
    if (!(sigma >= 0.0)) {
        std::ostringstream os;
        os << "RCS fit evaluates to " << sigma << " m^2 at s = " << area_m2 << " m^2";
        throw Error(ErrorCode::NegativeRcs, os.str());
    }
    return std::sqrt(sigma);
}

RcsFit fit_rcs_quadratic(std::span<const AreaRcsPoint> points) {
    if (points.size() < 3) {
        throw Error(ErrorCode::DegenerateSystem, "quadratic fit needs at least 3 points");
    }
    std::vector<double> areas;
    for (const auto& p : points) areas.push_back(p.area_m2);
    std::sort(areas.begin(), areas.end());
    if (std::unique(areas.begin(), areas.end()) - areas.begin() < 3) {
        throw Error(ErrorCode::DegenerateSystem, "quadratic fit needs 3 distinct areas");
    }

    // Normal equations on a centred, scaled abscissa u = (s - mean) / scale.
    double mean = 0.0;
    for (const auto& p : points) mean += p.area_m2;
    mean /= static_cast<double>(points.size());
    double scale = 0.0;
    for (const auto& p : points) scale = std::max(scale, std::abs(p.area_m2 - mean));

    std::array<std::array<double, 4>, 3> m{};
    for (const auto& p : points) {
        const double u = (p.area_m2 - mean) / scale;
        const std::array<double, 3> basis{u * u, u, 1.0};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
            m[r][3] += basis[r] * p.rcs_m2;
        }
    }

    double diag_scale = 0.0;
    for (int r = 0; r < 3; ++r) diag_scale = std::max(diag_scale, std::abs(m[r][r]));
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        }
        if (std::abs(m[pivot][col]) <= 1e-13 * diag_scale) {
            throw Error(ErrorCode::DegenerateSystem, "singular normal equations");
        }
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    const double qa = m[0][3] / m[0][0]; // u^2
    const double qb = m[1][3] / m[1][1]; // u
    const double qc = m[2][3] / m[2][2]; // 1

    // Map back: u = (s - mean)/scale.
    const double s2 = scale * scale;
    RcsFit fit;
    fit.c2 = qa / s2;
    fit.c1 = -2.0 * qa * mean / s2 + qb / scale;
    fit.c0 = qa * mean * mean / s2 - qb * mean / scale + qc;
    return fit;
}

// ---- geometry ------------------------------------------------------------

namespace {

void check_location(double x_m, const ScenarioConfig& cfg) {
    if (!(x_m >= 0.0 && x_m <= cfg.link_distance_m())) {
        std::ostringstream os;
        os << "panel location x = " << x_m << " m outside [0, " << cfg.link_distance_m() << "]";
        throw Error(ErrorCode::OutOfRange, os.str());
    }
}

} // namespace

double two_ray_path_length(double x_m, const ScenarioConfig& cfg) {
    check_location(x_m, cfg);
    const double h = cfg.offset_height_m();
    const double D = cfg.link_distance_m();
    return std::hypot(x_m, h) + std::hypot(D - x_m, h);
}

double two_ray_min_path_length(const ScenarioConfig& cfg) {
    return 2.0 * std::hypot(cfg.offset_height_m(), 0.5 * cfg.link_distance_m());
}

double two_ray_max_path_length(const ScenarioConfig& cfg) {
    return std::max(two_ray_path_length(0.0, cfg), two_ray_path_length(cfg.link_distance_m(), cfg));
}

double element_path_length(std::size_t i, std::size_t j, const PanelGeometry& panel,
                           const ScenarioConfig& cfg) {
    const Point3 c = panel.element_center(i, j);
    const double lateral_sq = c.y * c.y + c.z * c.z;
    const double to_ap = std::sqrt(c.x * c.x + lateral_sq);
    const double rest = cfg.link_distance_m() - c.x;
    const double to_user = std::sqrt(rest * rest + lateral_sq);
    return to_ap + to_user;
}

std::vector<double> element_path_lengths(const PanelGeometry& panel, const ScenarioConfig& cfg) {
    std::vector<double> d;
    d.reserve(panel.element_count());
    for (std::size_t i = 0; i < panel.rows(); ++i) {
        for (std::size_t j = 0; j < panel.cols(); ++j) d.push_back(element_path_length(i, j, panel, cfg));
    }
    return d;
}

LocationPair location_from_path_length(double path_m, const ScenarioConfig& cfg) {
    const double D = cfg.link_distance_m();
    const double h = cfg.offset_height_m();
    const double d_min = two_ray_min_path_length(cfg);
    const double d_max = two_ray_max_path_length(cfg);
    const double slack = 1e-12 * d_min;

    if (!(path_m >= d_min - slack)) {
        std::ostringstream os;
        os << "path length " << path_m << " m below the minimum " << d_min << " m";
        throw Error(ErrorCode::Infeasible, os.str());
    }
    if (path_m > d_max + slack) {
        std::ostringstream os;
        os << "path length " << path_m << " m exceeds " << d_max << " m reachable on [0, D]";
        throw Error(ErrorCode::Infeasible, os.str());
    }

    // The panel sits on an ellipse with foci at the AP and the user:
    // semi-major a_e = d/2, focal half-distance c = D/2, b^2 = a_e^2 - c^2.
    const double a_e = 0.5 * path_m;
    const double c = 0.5 * D;
    const double b_sq = (a_e - c) * (a_e + c);
    double offset = 0.0;
    if (b_sq > 0.0) {
        const double ratio = 1.0 - h * h / b_sq;
        offset = ratio > 0.0 ? a_e * std::sqrt(ratio) : 0.0;
    }
    const double near = std::clamp(c - offset, 0.0, D);
    const double far = std::clamp(c + offset, 0.0, D);
    return {near, far};
}

} // namespace irs
