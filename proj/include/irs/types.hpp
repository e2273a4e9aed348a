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
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace irs {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Floored modulo into [0, 2*pi).
double wrap_phase(double radians) noexcept;

/// Quadratic radar-cross-section model sigma(s) = c2*s^2 + c1*s + c0.
struct RcsFit {
    double c2 = 0.2;
    double c1 = -0.0961;
    double c0 = -0.76;

    static constexpr RcsFit canonical() noexcept { return {}; }
    double operator()(double area_m2) const noexcept { return (c2 * area_m2 + c1) * area_m2 + c0; }
};

/// Construction parameters for a ScenarioConfig. Either reflection_coeff or
/// panel_area_m2 must be present; an explicit coefficient wins.
struct ScenarioParams {
    double transmit_power_w = 2.0;
    double link_distance_m = 10.0;
    double wavelength_m = 0.3278;
    double offset_height_m = 4.0;
    std::optional<double> panel_area_m2 = 8.0;
    std::optional<double> reflection_coeff;
    double tx_gain = 1.0;
    double rx_gain = 1.0;
    double tx_end_reflection = 0.0;
    double rx_end_reflection = 0.0;
    RcsFit rcs_fit = RcsFit::canonical();
};

/// Link-level constants shared by the single- and multi-element models.
///
/// The reflection coefficient is resolved once at construction, from the RCS
/// fit when only a panel area is given. Values above 1 are accepted: the
/// canonical fit yields about 3.36 for s = 8 m^2, which is not physical but is
/// what the reference numbers are built on.
class ScenarioConfig {
public:
    explicit ScenarioConfig(const ScenarioParams& params = {});

    /// P_t = 2 W, D = 10 m, h = 4 m, s = 8 m^2, lambda = 0.3278 m.
    static ScenarioConfig single_element_defaults();
    /// P_t = 10 W, D = 100 m, h = 25 m, lambda = 0.12 m, Gamma = 0.5.
    static ScenarioConfig multi_element_defaults();

    double transmit_power_w() const noexcept { return params_.transmit_power_w; }
    double link_distance_m() const noexcept { return params_.link_distance_m; }
    double wavelength_m() const noexcept { return params_.wavelength_m; }
    double wavenumber() const noexcept { return wavenumber_; }
    double offset_height_m() const noexcept { return params_.offset_height_m; }
    std::optional<double> panel_area_m2() const noexcept { return params_.panel_area_m2; }
    double reflection_coeff() const noexcept { return reflection_coeff_; }
    double tx_gain() const noexcept { return params_.tx_gain; }
    double rx_gain() const noexcept { return params_.rx_gain; }
    double tx_end_reflection() const noexcept { return params_.tx_end_reflection; }
    double rx_end_reflection() const noexcept { return params_.rx_end_reflection; }
    const ScenarioParams& params() const noexcept { return params_; }

    /// P_t * G_t * G_r * (1 - |Gamma_t|^2) * (1 - |Gamma_r|^2) * (lambda / 4 pi)^2.
    double link_scale() const noexcept { return link_scale_; }

    ScenarioConfig with_reflection_coeff(double gamma) const;
    ScenarioConfig with_offset_height(double h) const;

private:
    ScenarioParams params_;
    double wavenumber_ = 0.0;
    double reflection_coeff_ = 0.0;
    double link_scale_ = 0.0;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// M x N grid of square elements of side 2a. The corner is the leftmost
/// (closest to the AP) and bottom-most point of the panel.
class PanelGeometry {
public:
    PanelGeometry(std::size_t rows, std::size_t cols, double half_width_m, double corner_x_m,
                  double lateral_offset_m, double corner_height_m);

    /// 20 x 20 elements, a = 7.5 mm, y' = 0.5 m, h' = 25 m, x' = 0.
    static PanelGeometry multi_element_defaults();

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t element_count() const noexcept { return rows_ * cols_; }
    double half_width_m() const noexcept { return half_width_m_; }
    double corner_x_m() const noexcept { return corner_x_m_; }
    double lateral_offset_m() const noexcept { return lateral_offset_m_; }
    double corner_height_m() const noexcept { return corner_height_m_; }

    /// Center of element (i, j): (x' + (2j+1)a, y', h' + (2i+1)a).
    Point3 element_center(std::size_t i, std::size_t j) const;

    PanelGeometry moved_to(double corner_x_m) const;
    PanelGeometry resized(std::size_t rows, std::size_t cols) const;
    PanelGeometry with_half_width(double half_width_m) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    double half_width_m_;
    double corner_x_m_;
    double lateral_offset_m_;
    double corner_height_m_;
};

/// Per-element reflection phases, row-major, every entry wrapped into [0, 2pi).
class PhaseProfile {
public:
    PhaseProfile(std::size_t rows, std::size_t cols, std::vector<double> values);

    static PhaseProfile uniform(std::size_t rows, std::size_t cols, double radians);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double at(std::size_t i, std::size_t j) const;
    std::span<const double> values() const noexcept { return values_; }

    PhaseProfile with(std::size_t i, std::size_t j, double radians) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
};

} // namespace irs
