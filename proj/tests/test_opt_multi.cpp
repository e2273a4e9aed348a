#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "irs/channel.hpp"
#include "irs/error.hpp"
#include "irs/opt_multi.hpp"
#include "irs/oracle.hpp"
#include "irs/power.hpp"

using namespace irs;

namespace {

const ScenarioConfig& defaults() {
    static const ScenarioConfig cfg = ScenarioConfig::multi_element_defaults();
    return cfg;
}

const PanelGeometry& panel20() {
    static const PanelGeometry panel = PanelGeometry::multi_element_defaults();
    return panel;
}

} // namespace

TEST_CASE("aligned phases") {
    const PanelGeometry panel = panel20().moved_to(12.0);
    const PhaseProfile ph = optimal_phases(panel, defaults());
    const auto d = element_path_lengths(panel, defaults());
    const double k = defaults().wavenumber();
    for (std::size_t e = 0; e < d.size(); ++e) {
        CHECK(ph.values()[e] >= 0.0);
        CHECK(ph.values()[e] < kTwoPi);
        const double residual = std::remainder(ph.values()[e] - k * (d[e] - 100.0), kTwoPi);
        CHECK(std::abs(residual) < 1e-9);
    }
}

TEST_CASE("closed-form location") {
    CHECK(optimal_location_multi(panel20(), defaults()) == doctest::Approx(49.8575).epsilon(1e-12));
    const PanelGeometry single = panel20().resized(1, 1);
    CHECK(optimal_location_multi(single, defaults()) == doctest::Approx(50.0));

    ScenarioParams p = defaults().params();
    p.link_distance_m = 1.0;
    const ScenarioConfig tiny(p);
    const PanelGeometry huge(100, 100, 0.5, 0.0, 0.5, 25.0);
    try {
        optimal_location_multi(huge, tiny);
        FAIL("expected InfeasibleGeometry");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InfeasibleGeometry);
    }
}

TEST_CASE("minimax oracle agrees with the closed form within one element") {
    const MinimaxResult m = minimax_path_oracle(panel20(), defaults(), 10001);
    const double step = 100.0 / 10000.0;
    const double closed = optimal_location_multi(panel20(), defaults());
    CHECK(std::abs(m.x_best_m - closed) <= step);
    CHECK(std::abs(m.x_best_m - (50.0 - 20 * 0.0075)) <= step);
    CHECK(m.t_best_m == doctest::Approx(max_element_path(panel20().moved_to(m.x_best_m), defaults()).first));

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> side(1, 12);
    for (int n = 0; n < 40; ++n) {
        ScenarioParams p = defaults().params();
        p.link_distance_m = 20.0 + 150.0 * u(rng);
        const ScenarioConfig cfg(p);
        const PanelGeometry panel(side(rng), side(rng), 0.005 + 0.05 * u(rng), 0.0, 2.0 * u(rng), 1.0 + 30.0 * u(rng));
        const MinimaxResult mm = minimax_path_oracle(panel, cfg, 4001);
        const double h = p.link_distance_m / 4000.0;
        const double x = optimal_location_multi(panel, cfg);
        const double a = panel.half_width_m();
        CAPTURE(n);
        CHECK(std::abs(mm.x_best_m - (p.link_distance_m / 2.0 - static_cast<double>(panel.cols()) * a)) <= h);
        CHECK(std::abs(mm.x_best_m - x) <= h + a * (1.0 + 1e-9));
    }
}

TEST_CASE("binding element is on the far edge") {
    const PanelGeometry left = panel20().moved_to(10.0);
    const auto [dmax, idx] = max_element_path(left, defaults());
    CHECK(idx.row == 19);
    CHECK(idx.col == 0);
    CHECK(dmax == doctest::Approx(element_path_length(19, 0, left, defaults())));
    const PanelGeometry right = panel20().moved_to(80.0);
    CHECK(max_element_path(right, defaults()).second.col == 19);
}

TEST_CASE("joint optimum") {
    const MultiOptOutcome j = joint_optimum_multi(panel20(), defaults());
    CHECK(j.x_star_m == doctest::Approx(49.8575));
    CHECK(j.power_w == doctest::Approx(received_power_opt_phase_multi(panel20().moved_to(j.x_star_m), defaults())));
    CHECK(j.power_w == doctest::Approx(received_power_complex_multi(panel20().moved_to(j.x_star_m), j.phases_star,
                                                                    defaults())).epsilon(1e-10));
    const GridOptimum1 g = grid_search_multi_location(panel20(), defaults(), location_grid(defaults(), 10001), 1);
    CHECK(std::abs(g.x_m - j.x_star_m) <= 0.01);
    CHECK(j.power_w >= g.power_w * (1.0 - 1e-6));
    CHECK(j.max_path_m == doctest::Approx(max_element_path(panel20().moved_to(j.x_star_m), defaults()).first));
}

TEST_CASE("gradient with respect to path lengths") {
    const PanelGeometry panel = panel20().resized(4, 5).moved_to(30.0);
    const auto grad = gradient_wrt_paths(panel, defaults());
    const auto d = element_path_lengths(panel, defaults());
    REQUIRE(grad.size() == d.size());
    for (std::size_t e = 0; e < d.size(); ++e) {
        CHECK(grad[e] < 0.0);
        auto f = [&](double v) {
            std::vector<double> q = d;
            q[e] = v;
            return received_power_opt_phase_from_paths(q, defaults());
        };
        const double fd = finite_difference(f, d[e], 1e-4).first;
        CHECK(std::abs(fd - grad[e]) <= 1e-6 * std::abs(grad[e]));
    }
    std::vector<double> flat{50.0, 60.0, 70.0};
    const auto gf = gradient_from_paths(flat, defaults());
    CHECK(std::abs(gf[0]) > std::abs(gf[1]));
    CHECK(std::abs(gf[1]) > std::abs(gf[2]));
}

TEST_CASE("perturbing aligned phases loses power") {
    const MultiOptOutcome j = joint_optimum_multi(panel20().resized(6, 6), defaults());
    const PanelGeometry at = panel20().resized(6, 6).moved_to(j.x_star_m);
    std::mt19937_64 rng(9);
    std::normal_distribution<double> jitter(0.0, 0.3);
    for (int n = 0; n < 100; ++n) {
        std::vector<double> v(j.phases_star.values().begin(), j.phases_star.values().end());
        for (double& t : v) t += jitter(rng);
        CHECK(received_power_complex_multi(at, PhaseProfile(6, 6, v), defaults()) <= j.power_w * (1.0 + 1e-12));
    }
}

TEST_CASE("optimal power grows with panel size") {
    double previous = 0.0;
    for (std::size_t n : {1u, 2u, 5u, 10u, 20u, 30u}) {
        const double p = joint_optimum_multi(panel20().resized(n, n), defaults()).power_w;
        CHECK(p > previous);
        previous = p;
    }
}

TEST_CASE("joint optimum beats the fixed-phase edge placement") {
    for (double g : {0.1, 0.3, 0.5, 0.9}) {
        const ScenarioConfig cfg = defaults().with_reflection_coeff(g);
        const double joint = joint_optimum_multi(panel20(), cfg).power_w;
        const double bench = received_power_complex_multi(panel20().moved_to(0.0), PhaseProfile::uniform(20, 20, 0.0), cfg);
        CHECK(joint > bench);
    }
}
