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

#include "irs/experiment.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <sstream>

#include "irs/channel.hpp"
#include "irs/csv.hpp"
#include "irs/error.hpp"
#include "irs/opt_multi.hpp"
#include "irs/opt_single.hpp"
#include "irs/oracle.hpp"
#include "irs/power.hpp"

namespace irs {

namespace {

constexpr std::pair<ExperimentId, std::string_view> kIds[] = {
    {ExperimentId::Fig4, "fig4"},
    {ExperimentId::Fig5, "fig5"},
    {ExperimentId::Fig6, "fig6"},
    {ExperimentId::Fig7FixedPhaseZ, "fig7_fixed_phase_Z"},
    {ExperimentId::Fig9GammaSweep, "fig9_gamma_sweep"},
    {ExperimentId::Fig10Benchmark, "fig10_benchmark"},
    {ExperimentId::CustomSweep, "custom_sweep"},
};

std::string schema_name(ExperimentId id, std::string_view table) {
    std::string s = "irs-opt.";
    s += to_string(id);
    if (!table.empty()) {
        s += '.';
        s += table;
    }
    return s + ".v1";
}

double mean(const std::vector<double>& v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Index of the first maximum.
std::size_t first_argmax(const std::vector<double>& v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

class Recorder {
public:
    Recorder(const ExperimentSpec& spec, const RunOptions& options) {
        summary_.experiment = std::string(to_string(spec.id));
        dir_ = options.output_dir.value_or(spec.output_dir);
        std::filesystem::create_directories(dir_);
        put("experiment", summary_.experiment);
        put("model", std::string(to_string(spec.model)));
        if (options.seed) put("seed", std::to_string(*options.seed));
    }

    void put(std::string key, std::string value) { summary_.entries.emplace_back(std::move(key), std::move(value)); }
    void put(std::string key, double value) { put(std::move(key), format_double(value)); }

    void save(const CsvTable& table, const std::string& name) {
        const auto path = dir_ / name;
        table.write(path);
        summary_.files.push_back(path);
        put("file", path.string());
    }

    ExperimentSummary take() { return std::move(summary_); }

private:
    std::filesystem::path dir_;
    ExperimentSummary summary_;
};

void run_fig4(const ExperimentSpec& spec, std::size_t points, Recorder& rec) {
    const ScenarioConfig& cfg = spec.scenario;
    const GridSpec xs = location_grid(cfg, points);
    CsvTable table(schema_name(spec.id, ""), {"theta", "x", "path_m", "power_w"});
    for (std::size_t t = 0; t < spec.sweep.theta_values.size(); ++t) {
        const double theta = spec.sweep.theta_values[t];
        std::vector<double> power(points);
        for (std::size_t i = 0; i < points; ++i) {
            const double x = xs.at(i);
            power[i] = received_power_tractable_single(x, theta, cfg);
            table.row() << theta << x << two_ray_path_length(x, cfg) << power[i];
        }
        const std::size_t best = first_argmax(power);
        const OptimizationOutcome opt = optimal_location_fixed_phase(theta, cfg);
        const std::string key = "curve." + format_double(theta);
        rec.put(key + ".argmax_x", xs.at(best));
        rec.put(key + ".argmax_power_w", power[best]);
        rec.put(key + ".fit_x_star", opt.x_m);
        rec.put(key + ".fit_x_mirror", opt.x_pair.far_m);
        rec.put(key + ".fit_power_w", opt.power_w);
    }
    rec.save(table, "fig4.csv");
}

void run_fig5(const ExperimentSpec& spec, std::size_t points, std::size_t theta_points, Recorder& rec) {
    const ScenarioConfig& cfg = spec.scenario;
    const GridSpec xs = location_grid(cfg, points);
    const GridSpec ts = phase_grid(theta_points);
    CsvTable table(schema_name(spec.id, ""), {"x", "theta", "power_w"});
    double best = -1.0;
    double best_x = 0.0;
    double best_t = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double d = two_ray_path_length(xs.at(i), cfg);
        for (std::size_t j = 0; j < theta_points; ++j) {
            const double p = received_power_at_path(d, ts.at(j), cfg);
            table.row() << xs.at(i) << ts.at(j) << p;
            if (p > best) {
                best = p;
                best_x = xs.at(i);
                best_t = ts.at(j);
            }
        }
    }
    const SingleOptimum joint = joint_optimum_single(cfg);
    rec.put("curve.surface.argmax_x", best_x);
    rec.put("curve.surface.argmax_theta", best_t);
    rec.put("curve.surface.argmax_power_w", best);
    rec.put("joint.x_star", joint.x_m);
    rec.put("joint.theta_star", joint.theta);
    rec.put("joint.power_w", joint.power_w);
    rec.save(table, "fig5.csv");
}

void run_fig6(const ExperimentSpec& spec, std::size_t points, Recorder& rec) {
    const ScenarioConfig& cfg = spec.scenario;
    const GridSpec xs = location_grid(cfg, points);
    CsvTable table(schema_name(spec.id, ""), {"half_width_m", "x_prime", "power_w"});
    for (double a : spec.sweep.half_widths) {
        const PanelGeometry panel = spec.panel->with_half_width(a);
        std::vector<double> power(points);
        parallel_fill(points, 0, [&](std::size_t i) { return received_power_opt_phase_multi(panel.moved_to(xs.at(i)), cfg); },
                      power.data());
        for (std::size_t i = 0; i < points; ++i) table.row() << a << xs.at(i) << power[i];
        const std::size_t best = first_argmax(power);
        const MultiOptOutcome joint = joint_optimum_multi(panel, cfg);
        const std::string key = "curve." + format_double(a);
        rec.put(key + ".argmax_x", xs.at(best));
        rec.put(key + ".argmax_power_w", power[best]);
        rec.put(key + ".closed_form_x_star", joint.x_star_m);
        rec.put(key + ".closed_form_power_w", joint.power_w);
    }
    rec.save(table, "fig6.csv");
}

void run_fig7(const ExperimentSpec& spec, std::size_t points, Recorder& rec) {
    const ScenarioConfig& cfg = spec.scenario;
    const GridSpec xs = location_grid(cfg, points);
    CsvTable table(schema_name(spec.id, ""), {"z", "x_prime", "power_w"});
    for (std::size_t z : spec.sweep.z_values) {
        std::vector<double> power(points);
        parallel_fill(
            points, 0,
            [&](std::size_t i) {
                const PanelGeometry panel = spec.panel->moved_to(xs.at(i));
                const PhaseProfile phases = partially_stuck_phases(panel, cfg, z);
                return received_power_complex_multi(panel, phases, cfg);
            },
            power.data());
        for (std::size_t i = 0; i < points; ++i) table.row() << z << xs.at(i) << power[i];
        const std::size_t best = first_argmax(power);
        const std::string key = "curve." + std::to_string(z);
        rec.put(key + ".argmax_x", xs.at(best));
        rec.put(key + ".argmax_power_w", power[best]);
        rec.put(key + ".mean_power_w", mean(power));
    }
    rec.save(table, "fig7_fixed_phase_Z.csv");
}

void run_fig9(const ExperimentSpec& spec, Recorder& rec) {
    CsvTable table(schema_name(spec.id, ""), {"rows", "cols", "gamma", "x_prime", "power_w"});
    for (std::size_t n : spec.sweep.panel_sides) {
        const PanelGeometry panel = spec.panel->resized(n, n);
        std::vector<double> power;
        for (double g : spec.sweep.gamma_values) {
            const MultiOptOutcome joint = joint_optimum_multi(panel, spec.scenario.with_reflection_coeff(g));
            table.row() << n << n << g << joint.x_star_m << joint.power_w;
            power.push_back(joint.power_w);
        }
        rec.put("panel." + std::to_string(n) + "x" + std::to_string(n) + ".mean_power_w", mean(power));
    }
    rec.save(table, "fig9_gamma_sweep.csv");
}

void run_fig10(const ExperimentSpec& spec, std::size_t points, Recorder& rec) {
    const BenchmarkReport r = compute_benchmark(*spec.panel, spec.scenario, spec.sweep.gamma_values, points);
    CsvTable table(schema_name(spec.id, ""),
                   {"gamma", "benchmark_w", "opt_location_w", "opt_phase_w", "joint_w", "pct_opt_location",
                    "pct_opt_phase", "pct_joint"});
    for (std::size_t g = 0; g < r.gamma_values.size(); ++g) {
        table.row() << r.gamma_values[g] << r.power_benchmark_w[g] << r.power_opt_location_w[g]
                    << r.power_opt_phase_w[g] << r.power_joint_w[g] << r.pct_opt_location[g] << r.pct_opt_phase[g]
                    << r.pct_joint[g];
    }
    std::ostringstream grid;
    for (std::size_t g = 0; g < r.gamma_values.size(); ++g) grid << (g ? "," : "") << format_double(r.gamma_values[g]);
    rec.put("gamma_grid", grid.str());
    rec.put("mean_pct.opt_location", r.mean_pct_opt_location());
    rec.put("mean_pct.opt_phase", r.mean_pct_opt_phase());
    rec.put("mean_pct.joint", r.mean_pct_joint());
    rec.save(table, "fig10_benchmark.csv");
}

void run_custom(const ExperimentSpec& spec, std::size_t points, Recorder& rec) {
    const ScenarioConfig& cfg = spec.scenario;
    const GridSpec xs = location_grid(cfg, points);
    const double theta = spec.sweep.theta;
    std::vector<double> fixed(points);
    std::vector<double> aligned(points);
    if (spec.model == Model::Single) {
        CsvTable table(schema_name(spec.id, "single"), {"x", "path_m", "power_fixed_w", "theta_opt", "power_opt_phase_w"});
        for (std::size_t i = 0; i < points; ++i) {
            const double x = xs.at(i);
            const SingleOptimum opt = optimal_phase_fixed_location(x, cfg);
            fixed[i] = received_power_tractable_single(x, theta, cfg);
            aligned[i] = opt.power_w;
            table.row() << x << two_ray_path_length(x, cfg) << fixed[i] << opt.theta << aligned[i];
        }
        rec.save(table, "custom_sweep.csv");
    } else {
        CsvTable table(schema_name(spec.id, "multi"), {"x_prime", "power_fixed_w", "power_opt_phase_w"});
        for (std::size_t i = 0; i < points; ++i) {
            const PanelGeometry panel = spec.panel->moved_to(xs.at(i));
            fixed[i] = received_power_complex_multi(
                panel, PhaseProfile::uniform(panel.rows(), panel.cols(), theta), cfg);
            aligned[i] = received_power_opt_phase_multi(panel, cfg);
            table.row() << xs.at(i) << fixed[i] << aligned[i];
        }
        rec.save(table, "custom_sweep.csv");
    }
    const std::size_t bf = first_argmax(fixed);
    const std::size_t ba = first_argmax(aligned);
    rec.put("curve.fixed.argmax_x", xs.at(bf));
    rec.put("curve.fixed.argmax_power_w", fixed[bf]);
    rec.put("curve.opt_phase.argmax_x", xs.at(ba));
    rec.put("curve.opt_phase.argmax_power_w", aligned[ba]);
}

} // namespace

std::string_view to_string(ExperimentId id) noexcept {
    for (const auto& [value, name] : kIds) {
        if (value == id) return name;
    }
    return "unknown";
}

std::optional<ExperimentId> parse_experiment_id(std::string_view text) noexcept {
    for (const auto& [value, name] : kIds) {
        if (name == text) return value;
    }
    return std::nullopt;
}

std::string_view to_string(Model model) noexcept { return model == Model::Single ? "single" : "multi"; }

Model default_model(ExperimentId id) noexcept {
    return id == ExperimentId::Fig4 || id == ExperimentId::Fig5 ? Model::Single : Model::Multi;
}

SweepSettings::SweepSettings()
    : theta_values{std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 3.0, std::numbers::pi,
                   1.5 * std::numbers::pi},
      half_widths{0.0075, 0.015, 0.0225, 0.03}, z_values{0, 1, 20, 100, 200, 300, 400},
      gamma_values{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, panel_sides{1, 10, 20} {}

double BenchmarkReport::mean_pct_opt_location() const { return mean(pct_opt_location); }
double BenchmarkReport::mean_pct_opt_phase() const { return mean(pct_opt_phase); }
double BenchmarkReport::mean_pct_joint() const { return mean(pct_joint); }

PhaseProfile partially_stuck_phases(const PanelGeometry& panel, const ScenarioConfig& cfg, std::size_t stuck) {
    if (stuck > panel.element_count()) {
        throw Error(ErrorCode::InvalidArgument, "more stuck elements than the panel holds");
    }
    const PhaseProfile aligned = optimal_phases(panel, cfg);
    std::vector<double> v(aligned.values().begin(), aligned.values().end());
    std::fill_n(v.begin(), stuck, kTwoPi);
    return PhaseProfile(panel.rows(), panel.cols(), std::move(v));
}

BenchmarkReport compute_benchmark(const PanelGeometry& panel_template, const ScenarioConfig& cfg,
                                  const std::vector<double>& gamma_values, std::size_t location_points) {
    const GridSpec xs = location_grid(cfg, location_points);
    xs.validate();
    const PhaseProfile stuck = PhaseProfile::uniform(panel_template.rows(), panel_template.cols(), kTwoPi);
    const PanelGeometry at_ap = panel_template.moved_to(0.0);

    BenchmarkReport r;
    for (double g : gamma_values) {
        const ScenarioConfig c = cfg.with_reflection_coeff(g);
        const double bench = received_power_complex_multi(at_ap, stuck, c);

        std::vector<double> sweep(location_points);
        parallel_fill(location_points, 0,
                      [&](std::size_t i) { return received_power_complex_multi(panel_template.moved_to(xs.at(i)), stuck, c); },
                      sweep.data());
        const double opt_location = *std::max_element(sweep.begin(), sweep.end());
        const double opt_phase = received_power_opt_phase_multi(at_ap, c);
        const double joint = joint_optimum_multi(panel_template, c).power_w;

        r.gamma_values.push_back(g);
        r.power_benchmark_w.push_back(bench);
        r.power_opt_location_w.push_back(opt_location);
        r.power_opt_phase_w.push_back(opt_phase);
        r.power_joint_w.push_back(joint);
        r.pct_opt_location.push_back(100.0 * (opt_location - bench) / bench);
        r.pct_opt_phase.push_back(100.0 * (opt_phase - bench) / bench);
        r.pct_joint.push_back(100.0 * (joint - bench) / bench);
    }
    return r;
}

std::optional<std::string> ExperimentSummary::get(std::string_view key) const {
    for (const auto& [k, v] : entries) {
        if (k == key) return v;
    }
    return std::nullopt;
}

std::string ExperimentSummary::str() const {
    std::string out;
    for (const auto& [k, v] : entries) out += k + " = " + v + "\n";
    return out;
}

ExperimentSummary run_experiment(const ExperimentSpec& spec, const RunOptions& options) {
    validate_spec(spec);
    ExperimentSpec effective = spec;
    if (options.grid_points) {
        effective.sweep.points = *options.grid_points;
        effective.sweep.theta_points = *options.grid_points;
        validate_spec(effective);
    }
    const std::size_t points = effective.sweep.points;
    Recorder rec(effective, options);
    rec.put("points", std::to_string(points));

    switch (effective.id) {
    case ExperimentId::Fig4: run_fig4(effective, points, rec); break;
    case ExperimentId::Fig5: run_fig5(effective, points, effective.sweep.theta_points, rec); break;
    case ExperimentId::Fig6: run_fig6(effective, points, rec); break;
    case ExperimentId::Fig7FixedPhaseZ: run_fig7(effective, points, rec); break;
    case ExperimentId::Fig9GammaSweep: run_fig9(effective, rec); break;
    case ExperimentId::Fig10Benchmark: run_fig10(effective, points, rec); break;
    case ExperimentId::CustomSweep: run_custom(effective, points, rec); break;
    }
    return rec.take();
}

} // namespace irs
