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

// irs-opt command line.
//
//   irs-opt run <spec-file> [--out DIR] [--grid-points N] [--seed N]
//   irs-opt optimize single|multi <spec-file>
//   irs-opt validate <spec-file>
//
// Exit codes: 0 success, 2 parse/validation, 3 infeasible, 4 internal.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "irs/channel.hpp"
#include "irs/csv.hpp"
#include "irs/error.hpp"
#include "irs/experiment.hpp"
#include "irs/opt_multi.hpp"
#include "irs/opt_single.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

int exit_code_for(irs::ErrorCode code) {
    using irs::ErrorCode;
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::NegativeRcs:
    case ErrorCode::OutOfRange:
    case ErrorCode::IoError:
        return kExitParse;
    case ErrorCode::Infeasible:
    case ErrorCode::InfeasibleGeometry:
    case ErrorCode::NoFeasibleBranch:
        return kExitInfeasible;
    default:
        return kExitInternal;
    }
}

void print_single(const irs::ExperimentSpec& spec) {
    using irs::format_double;
    const auto& cfg = spec.scenario;
    const irs::SingleOptimum joint = irs::joint_optimum_single(cfg);
    const irs::OptimizationOutcome loc = irs::optimal_location_fixed_phase(spec.sweep.theta, cfg);
    std::cout << "model = single\n"
              << "reflection_coeff = " << format_double(cfg.reflection_coeff()) << "\n"
              << "joint.x_star = " << format_double(joint.x_m) << "\n"
              << "joint.theta_star = " << format_double(joint.theta) << "\n"
              << "joint.power_w = " << format_double(joint.power_w) << "\n"
              << "fixed_phase.theta = " << format_double(loc.theta) << "\n"
              << "fixed_phase.x_star = " << format_double(loc.x_m) << "\n"
              << "fixed_phase.x_mirror = " << format_double(loc.x_pair.far_m) << "\n"
              << "fixed_phase.path_m = " << format_double(loc.path_m) << "\n"
              << "fixed_phase.power_w = " << format_double(loc.power_w) << "\n"
              << "fixed_phase.candidates = " << loc.candidates.size() << "\n";
}

void print_multi(const irs::ExperimentSpec& spec) {
    using irs::format_double;
    const irs::MultiOptOutcome joint = irs::joint_optimum_multi(*spec.panel, spec.scenario);
    std::cout << "model = multi\n"
              << "elements = " << spec.panel->element_count() << "\n"
              << "joint.x_star = " << format_double(joint.x_star_m) << "\n"
              << "joint.power_w = " << format_double(joint.power_w) << "\n"
              << "joint.max_path_m = " << format_double(joint.max_path_m) << "\n"
              << "joint.binding_element = " << joint.argmax_element.row << "," << joint.argmax_element.col << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"IRS placement and phase optimization experiments"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_dir;
    std::size_t grid_points = 0;
    std::uint64_t seed = 0;

    auto* run = app.add_subcommand("run", "Run the experiment described by a spec file");
    run->add_option("spec", spec_path, "Scenario spec file")->required();
    run->add_option("--out", out_dir, "Output directory for CSV files");
    run->add_option("--grid-points", grid_points, "Samples per sweep axis")->check(CLI::Range(2, 100000000));
    run->add_option("--seed", seed, "Recorded in the summary; experiments are deterministic");

    std::string which;
    auto* optimize = app.add_subcommand("optimize", "Print the closed-form optima for a scenario");
    optimize->add_option("model", which, "single or multi")->required()->check(CLI::IsMember({"single", "multi"}));
    optimize->add_option("spec", spec_path, "Scenario spec file")->required();

    auto* validate = app.add_subcommand("validate", "Parse and validate a spec file");
    validate->add_option("spec", spec_path, "Scenario spec file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (*run) {
            const irs::ExperimentSpec spec = irs::load_scenario(spec_path);
            irs::RunOptions options;
            if (!out_dir.empty()) options.output_dir = out_dir;
            if (run->count("--grid-points")) options.grid_points = grid_points;
            if (run->count("--seed")) options.seed = seed;
            std::cout << irs::run_experiment(spec, options).str();
        } else if (*optimize) {
            const irs::Model model = which == "single" ? irs::Model::Single : irs::Model::Multi;
            const irs::ExperimentSpec spec = irs::load_scenario(spec_path, model);
            if (spec.model != model) {
                throw irs::Error(irs::ErrorCode::ValidationError, "spec file sets model = " +
                                                                      std::string(irs::to_string(spec.model)));
            }
            if (model == irs::Model::Single) {
                print_single(spec);
            } else {
                print_multi(spec);
            }
        } else if (*validate) {
            const irs::ExperimentSpec spec = irs::load_scenario(spec_path);
            std::cout << "ok: " << irs::to_string(spec.id) << " (" << irs::to_string(spec.model) << ")\n";
        }
    } catch (const irs::Error& e) {
        std::cerr << "irs-opt: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "irs-opt: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
