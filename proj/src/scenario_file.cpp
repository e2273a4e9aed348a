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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "irs/error.hpp"
#include "irs/experiment.hpp"
#include "irs/opt_multi.hpp"

namespace irs {

namespace {

struct Entry {
    std::string value;
    std::size_t line = 0;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

const std::set<std::string, std::less<>>& known_keys() {
    static const std::set<std::string, std::less<>> keys{
        "experiment",
        "model",
        "scenario.transmit_power_w",
        "scenario.link_distance_m",
        "scenario.wavelength_m",
        "scenario.offset_height_m",
        "scenario.panel_area_m2",
        "scenario.reflection_coeff",
        "scenario.tx_gain",
        "scenario.rx_gain",
        "scenario.tx_end_reflection",
        "scenario.rx_end_reflection",
        "panel.rows",
        "panel.cols",
        "panel.half_width_m",
        "panel.corner_x_m",
        "panel.lateral_offset_m",
        "panel.corner_height_m",
        "sweep.points",
        "sweep.theta_points",
        "sweep.theta",
        "sweep.theta_values",
        "sweep.half_widths",
        "sweep.z_values",
        "sweep.gamma_values",
        "sweep.panel_sides",
        "output.dir",
    };
    return keys;
}

class Reader {
public:
    Reader(std::map<std::string, Entry, std::less<>> entries, std::string origin)
        : entries_(std::move(entries)), origin_(std::move(origin)) {}

    bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

    [[noreturn]] void fail(std::string_view key, const std::string& what) const {
        const auto it = entries_.find(key);
        std::ostringstream os;
        os << origin_;
        if (it != entries_.end()) os << ":" << it->second.line;
        os << ": " << key << ": " << what;
        throw Error(ErrorCode::ParseError, os.str());
    }

    std::optional<double> number(std::string_view key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        const auto v = parse_real(it->second.value);
        if (!v) fail(key, "expected a number, got '" + it->second.value + "'");
        return v;
    }

    std::optional<std::size_t> count(std::string_view key) const {
        const auto v = number(key);
        if (!v) return std::nullopt;
        if (*v < 0.0 || *v != static_cast<double>(static_cast<std::size_t>(*v))) {
            fail(key, "expected a non-negative integer");
        }
        return static_cast<std::size_t>(*v);
    }

    std::optional<std::vector<double>> list(std::string_view key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        std::vector<double> out;
        std::string_view rest = it->second.value;
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view item = trim(rest.substr(0, comma));
            const auto v = parse_real(item);
            if (!v) fail(key, "bad list element '" + std::string(item) + "'");
            out.push_back(*v);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return out;
    }

    std::optional<std::vector<std::size_t>> count_list(std::string_view key) const {
        const auto values = list(key);
        if (!values) return std::nullopt;
        std::vector<std::size_t> out;
        for (double v : *values) {
            if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
                fail(key, "expected non-negative integers");
            }
            out.push_back(static_cast<std::size_t>(v));
        }
        return out;
    }

    std::optional<std::string> word(std::string_view key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second.value;
    }

    // number | [number ['*']] 'pi' ['/' number]
    static std::optional<double> parse_real(std::string_view text) {
        text = trim(text);
        if (text.empty()) return std::nullopt;
        const auto pi_at = text.find("pi");
        if (pi_at == std::string_view::npos) return plain(text);

        double factor = 1.0;
        std::string_view head = trim(text.substr(0, pi_at));
        if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
        if (!head.empty()) {
            const auto f = plain(head);
            if (!f) return std::nullopt;
            factor = *f;
        }
        std::string_view tail = trim(text.substr(pi_at + 2));
        double divisor = 1.0;
        if (!tail.empty()) {
            if (tail.front() != '/') return std::nullopt;
            const auto dv = plain(trim(tail.substr(1)));
            if (!dv || *dv == 0.0) return std::nullopt;
            divisor = *dv;
        }
        return factor * std::numbers::pi / divisor;
    }

private:
    static std::optional<double> plain(std::string_view text) {
        double v = 0.0;
        const char* end = text.data() + text.size();
        const auto res = std::from_chars(text.data(), end, v);
        if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
        return v;
    }

    std::map<std::string, Entry, std::less<>> entries_;
    std::string origin_;
};

} // namespace

ExperimentSpec parse_scenario(std::string_view text, std::string_view origin, std::optional<Model> fallback_model) {
    std::map<std::string, Entry, std::less<>> entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::ostringstream where;
        where << origin << ":" << line_no << ": ";
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, where.str() + "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (!known_keys().contains(key)) throw Error(ErrorCode::ParseError, where.str() + "unknown key '" + key + "'");
        if (value.empty()) throw Error(ErrorCode::ParseError, where.str() + key + ": missing value");
        if (!entries.emplace(key, Entry{value, line_no}).second) {
            throw Error(ErrorCode::ParseError, where.str() + "duplicate key '" + key + "'");
        }
    }

    const Reader in(std::move(entries), std::string(origin));
    ExperimentSpec spec;

    if (const auto id = in.word("experiment")) {
        const auto parsed = parse_experiment_id(*id);
        if (!parsed) in.fail("experiment", "unknown experiment '" + *id + "'");
        spec.id = *parsed;
    }
    spec.model = fallback_model.value_or(default_model(spec.id));
    if (const auto m = in.word("model")) {
        if (*m == "single") {
            spec.model = Model::Single;
        } else if (*m == "multi") {
            spec.model = Model::Multi;
        } else {
            in.fail("model", "expected 'single' or 'multi'");
        }
    }

    ScenarioParams p = spec.model == Model::Single ? ScenarioConfig::single_element_defaults().params()
                                                   : ScenarioConfig::multi_element_defaults().params();
    if (auto v = in.number("scenario.transmit_power_w")) p.transmit_power_w = *v;
    if (auto v = in.number("scenario.link_distance_m")) p.link_distance_m = *v;
    if (auto v = in.number("scenario.wavelength_m")) p.wavelength_m = *v;
    if (auto v = in.number("scenario.offset_height_m")) p.offset_height_m = *v;
    if (auto v = in.number("scenario.tx_gain")) p.tx_gain = *v;
    if (auto v = in.number("scenario.rx_gain")) p.rx_gain = *v;
    if (auto v = in.number("scenario.tx_end_reflection")) p.tx_end_reflection = *v;
    if (auto v = in.number("scenario.rx_end_reflection")) p.rx_end_reflection = *v;
    if (auto v = in.number("scenario.panel_area_m2")) {
        p.panel_area_m2 = *v;
        // An area given on its own decides Gamma through the RCS fit.
        if (!in.has("scenario.reflection_coeff")) p.reflection_coeff.reset();
    }
    if (auto v = in.number("scenario.reflection_coeff")) p.reflection_coeff = *v;
    spec.scenario = ScenarioConfig(p);

    if (spec.model == Model::Multi) {
        PanelGeometry base = PanelGeometry::multi_element_defaults();
        const std::size_t rows = in.count("panel.rows").value_or(base.rows());
        const std::size_t cols = in.count("panel.cols").value_or(base.cols());
        spec.panel = PanelGeometry(rows, cols, in.number("panel.half_width_m").value_or(base.half_width_m()),
                                   in.number("panel.corner_x_m").value_or(base.corner_x_m()),
                                   in.number("panel.lateral_offset_m").value_or(base.lateral_offset_m()),
                                   in.number("panel.corner_height_m").value_or(base.corner_height_m()));
    } else {
        for (const char* key : {"panel.rows", "panel.cols", "panel.half_width_m", "panel.corner_x_m",
                                "panel.lateral_offset_m", "panel.corner_height_m"}) {
            if (in.has(key)) in.fail(key, "panel settings need the multi-element model");
        }
    }

    SweepSettings& s = spec.sweep;
    if (auto v = in.count("sweep.points")) s.points = *v;
    if (auto v = in.count("sweep.theta_points")) s.theta_points = *v;
    if (auto v = in.number("sweep.theta")) s.theta = *v;
    if (auto v = in.list("sweep.theta_values")) s.theta_values = *v;
    if (auto v = in.list("sweep.half_widths")) s.half_widths = *v;
    if (auto v = in.count_list("sweep.z_values")) s.z_values = *v;
    if (auto v = in.list("sweep.gamma_values")) s.gamma_values = *v;
    if (auto v = in.count_list("sweep.panel_sides")) s.panel_sides = *v;
    if (auto v = in.word("output.dir")) spec.output_dir = *v;
    return spec;
}

ExperimentSpec load_scenario(const std::filesystem::path& path, std::optional<Model> fallback_model) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    ExperimentSpec spec = parse_scenario(buf.str(), path.string(), fallback_model);
    validate_spec(spec);
    return spec;
}

void validate_spec(const ExperimentSpec& spec) {
    const auto bad = [](const std::string& what) { throw Error(ErrorCode::ValidationError, what); };
    const SweepSettings& s = spec.sweep;
    const bool multi_only = spec.id == ExperimentId::Fig6 || spec.id == ExperimentId::Fig7FixedPhaseZ ||
                            spec.id == ExperimentId::Fig9GammaSweep || spec.id == ExperimentId::Fig10Benchmark;
    const bool single_only = spec.id == ExperimentId::Fig4 || spec.id == ExperimentId::Fig5;
    if (multi_only && spec.model != Model::Multi) bad(std::string(to_string(spec.id)) + " needs model = multi");
    if (single_only && spec.model != Model::Single) bad(std::string(to_string(spec.id)) + " needs model = single");
    if (spec.model == Model::Multi && !spec.panel) bad("multi-element model needs a panel");

    if (s.points < 2) bad("sweep.points must be >= 2");
    if (spec.id == ExperimentId::Fig5 && s.theta_points < 2) bad("sweep.theta_points must be >= 2");
    if (!(s.theta >= 0.0 && s.theta < kTwoPi)) bad("sweep.theta must lie in [0, 2pi)");

    switch (spec.id) {
    case ExperimentId::Fig4:
        if (s.theta_values.empty()) bad("sweep.theta_values must not be empty");
        for (double t : s.theta_values) {
            if (!(t >= 0.0 && t < kTwoPi)) bad("sweep.theta_values must lie in [0, 2pi)");
        }
        break;
    case ExperimentId::Fig6:
        if (s.half_widths.empty()) bad("sweep.half_widths must not be empty");
        for (double a : s.half_widths) {
            if (!(a > 0.0)) bad("sweep.half_widths must be > 0");
            optimal_location_multi(spec.panel->with_half_width(a), spec.scenario);
        }
        break;
    case ExperimentId::Fig7FixedPhaseZ:
        if (s.z_values.empty()) bad("sweep.z_values must not be empty");
        for (std::size_t z : s.z_values) {
            if (z > spec.panel->element_count()) {
                bad("sweep.z_values entry " + std::to_string(z) + " exceeds the panel's " +
                    std::to_string(spec.panel->element_count()) + " elements");
            }
        }
        break;
    case ExperimentId::Fig9GammaSweep:
        if (s.panel_sides.empty()) bad("sweep.panel_sides must not be empty");
        for (std::size_t n : s.panel_sides) {
            if (n < 1) bad("sweep.panel_sides must be >= 1");
            optimal_location_multi(spec.panel->resized(n, n), spec.scenario);
        }
        [[fallthrough]];
    case ExperimentId::Fig10Benchmark:
        if (s.gamma_values.empty()) bad("sweep.gamma_values must not be empty");
        for (double g : s.gamma_values) {
            if (!(g >= 0.0)) bad("sweep.gamma_values must be >= 0");
        }
        if (spec.id == ExperimentId::Fig10Benchmark) optimal_location_multi(*spec.panel, spec.scenario);
        break;
    case ExperimentId::Fig5:
    case ExperimentId::CustomSweep:
        break;
    }
}

} // namespace irs
