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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irs/types.hpp"

namespace irs {

enum class ExperimentId {
    Fig4,            ///< single element: power vs x at fixed phases
    Fig5,            ///< single element: joint (x, theta) surface
    Fig6,            ///< multi element: aligned power vs x' for several a
    Fig7FixedPhaseZ, ///< multi element: Z elements stuck at 2pi
    Fig9GammaSweep,  ///< multi element: joint power vs Gamma and panel size
    Fig10Benchmark,  ///< multi element: schemes vs the x'=0, theta=2pi benchmark
    CustomSweep,
};

enum class Model { Single, Multi };

std::string_view to_string(ExperimentId id) noexcept;
std::optional<ExperimentId> parse_experiment_id(std::string_view text) noexcept;
std::string_view to_string(Model model) noexcept;

/// Model an experiment runs on unless the file says otherwise.
Model default_model(ExperimentId id) noexcept;

struct SweepSettings {
    std::size_t points = 1001;       ///< samples along x (or x')
    std::size_t theta_points = 201;  ///< samples along theta (fig5)
    double theta = 3.141592653589793; ///< fixed phase for custom sweeps
    std::vector<double> theta_values;  ///< fig4
    std::vector<double> half_widths;   ///< fig6
    std::vector<std::size_t> z_values; ///< fig7
    std::vector<double> gamma_values;  ///< fig9, fig10
    std::vector<std::size_t> panel_sides; ///< fig9: M = N values

    SweepSettings();
};

struct ExperimentSpec {
    ExperimentId id = ExperimentId::CustomSweep;
    Model model = Model::Multi;
    ScenarioConfig scenario;
    std::optional<PanelGeometry> panel; ///< set for the multi-element model
    SweepSettings sweep;
    std::filesystem::path output_dir = ".";
};

/// Parses the flat `key = value` format. `origin` is used in diagnostics.
///
/// Grammar, one entry per line:
///   line    := blank | comment | entry
///   comment := '#' anything
///   entry   := key '=' value [comment]
///   key     := 'experiment' | 'model' | ('scenario' | 'panel' | 'sweep' | 'output') '.' name
///   value   := number | word | number (',' number)*
/// Unknown or repeated keys are parse errors.
/// `fallback_model` replaces the experiment's default model when the text has
/// no `model` key.
ExperimentSpec parse_scenario(std::string_view text, std::string_view origin = "<input>",
                              std::optional<Model> fallback_model = std::nullopt);

/// Reads and parses a scenario file, then validates it.
ExperimentSpec load_scenario(const std::filesystem::path& path, std::optional<Model> fallback_model = std::nullopt);

/// Checks cross-field invariants (axes exist, resolutions >= 2, Z within the
/// element count, closed-form location feasible). Throws ValidationError or
/// InfeasibleGeometry.
void validate_spec(const ExperimentSpec& spec);

struct BenchmarkReport {
    std::vector<double> gamma_values;
    std::vector<double> power_benchmark_w;
    std::vector<double> power_opt_location_w;
    std::vector<double> power_opt_phase_w;
    std::vector<double> power_joint_w;
    std::vector<double> pct_opt_location;
    std::vector<double> pct_opt_phase;
    std::vector<double> pct_joint;

    double mean_pct_opt_location() const;
    double mean_pct_opt_phase() const;
    double mean_pct_joint() const;
};

/// Benchmark: panel at x' = 0 with every theta_ij = 2pi. Optimal location keeps
/// theta_ij = 2pi and grid-searches x' over `location_points` samples; optimal
/// phase keeps x' = 0 and aligns the phases; joint uses the closed forms.
BenchmarkReport compute_benchmark(const PanelGeometry& panel_template, const ScenarioConfig& cfg,
                                  const std::vector<double>& gamma_values, std::size_t location_points);

/// Phases aligned at the panel's location except the first `stuck` elements
/// (row-major), which hold theta = 2pi.
PhaseProfile partially_stuck_phases(const PanelGeometry& panel, const ScenarioConfig& cfg, std::size_t stuck);

struct RunOptions {
    std::optional<std::filesystem::path> output_dir;
    std::optional<std::size_t> grid_points;
    std::optional<std::uint64_t> seed;
};

struct ExperimentSummary {
    std::string experiment;
    std::vector<std::filesystem::path> files;
    std::vector<std::pair<std::string, std::string>> entries;

    std::optional<std::string> get(std::string_view key) const;
    std::string str() const;
};

/// Runs one experiment and writes its CSV files into the output directory.
ExperimentSummary run_experiment(const ExperimentSpec& spec, const RunOptions& options = {});

} // namespace irs
