#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "irs/channel.hpp"
#include "irs/error.hpp"
#include "irs/opt_single.hpp"
#include "irs/oracle.hpp"
#include "irs/power.hpp"

using namespace irs;
using std::numbers::pi;

TEST_CASE("quartic cosine fit stays within 0.025 on the half period") {
    const CosineFit fit;
    double worst = 0.0;
    for (int i = 0; i <= 100000; ++i) {
        const double z = -pi / 2.0 + pi * i / 100000.0;
        worst = std::max(worst, std::abs(fit(z) - std::cos(z)));
    }
    CHECK(worst <= 0.025);
    CHECK(worst > 0.02);
}

TEST_CASE("composed cosine polynomial matches the direct substitution") {
    const ScenarioConfig cfg = ScenarioConfig::single_element_defaults();
    const CosineFit fit;
    const double k = cfg.wavenumber();
    const double D = cfg.link_distance_m();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ud(10.0, 12.9), ut(0.0, kTwoPi);
    for (int n = 0; n < 200; ++n) {
        const double t = ut(rng);
        const double d = ud(rng);
        const Polynomial p = compose_cos_polynomial(t, cfg, fit);
        CHECK(p.degree() == 4);
        CHECK(p(d) == doctest::Approx(fit(k * d - t - k * D)).epsilon(1e-7));
    }
}

TEST_CASE("stationarity quintic has the sign of the derivative") {
    const ScenarioConfig cfg = ScenarioConfig::single_element_defaults();
    const CosineFit fit;
    const double D = cfg.link_distance_m();
    const double g = cfg.reflection_coeff();
    const double t = 0.8;
    const Polynomial p = compose_cos_polynomial(t, cfg, fit);
    const Polynomial q = stationarity_quintic(t, cfg, fit);
    CHECK(q.degree() == 5);
    // Power with the polynomial cosine, up to positive factors: g/d^2 + 2 p(d)/(D d)
    auto f = [&](double d) { return g / (d * d) + 2.0 * p(d) / (D * d); };
    for (double d = 10.05; d < 12.8; d += 0.1) {
        const double fd = (f(d + 1e-6) - f(d - 1e-6)) / 2e-6;
        if (std::abs(fd) < 1e-6) continue;
        CHECK((fd > 0.0) == (q(d) > 0.0));
    }
}

TEST_CASE("joint optimum sits at mid-link with the path-aligned phase") {
    const ScenarioConfig cfg = ScenarioConfig::single_element_defaults();
    const SingleOptimum j = joint_optimum_single(cfg);
    CHECK(j.x_m == 5.0);
    CHECK(j.theta == doctest::Approx(3.523959841438454).epsilon(1e-12));
    CHECK(j.power_w == doctest::Approx(1.7849431505060736e-4).epsilon(1e-12));
    CHECK(std::abs(j.power_w - 0.18e-3) / 0.18e-3 < 0.15);

    const GridOptimum2 g = grid_search_single(cfg, location_grid(cfg, 1001), phase_grid(1001), 1);
    CHECK(j.power_w >= g.power_w);
}

TEST_CASE("phase optimum at a fixed location") {
    const ScenarioConfig cfg = ScenarioConfig::single_element_defaults();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(0.0, 10.0), ut(0.0, kTwoPi);
    for (int n = 0; n < 20; ++n) {
        const double x = ux(rng);
        const SingleOptimum o = optimal_phase_fixed_location(x, cfg);
        CHECK(o.theta >= 0.0);
        CHECK(o.theta < kTwoPi);
        CHECK(o.power_w == doctest::Approx(received_power_complex_single(x, o.theta, cfg)).epsilon(1e-12));
        double best = 0.0;
        for (int s = 0; s < 10000; ++s) best = std::max(best, received_power_complex_single(x, ut(rng), cfg));
        CHECK(o.power_w >= best * (1.0 - 1e-12));
    }
    // Concave in theta around the optimum: first derivative vanishes, second is negative.
    const SingleOptimum o = optimal_phase_fixed_location(2.0, cfg);
    const Derivatives dv =
        finite_difference([&](double t) { return received_power_complex_single(2.0, wrap_phase(t), cfg); }, o.theta, 1e-4);
    CHECK(std::abs(dv.first) < 1e-9);
    CHECK(dv.second < 0.0);
}

TEST_CASE("fixed-phase location optimizer against a dense scan") {
    const ScenarioConfig cfg = ScenarioConfig::single_element_defaults();
    const GridSpec grid = location_grid(cfg, 100001);
    for (double t : {pi / 3.0, 2.0 * pi / 3.0, pi, 3.0 * pi / 2.0}) {
        CAPTURE(t);
        const OptimizationOutcome o = optimal_location_fixed_phase(t, cfg);
        const GridOptimum1 g = grid_search_single_location(cfg, t, grid, 1);
        CHECK(o.power_w >= 0.98 * g.power_w);
        CHECK(o.power_w <= g.power_w * (1.0 + 1e-6));
        CHECK(o.x_m <= 5.0);
        CHECK(o.x_pair.near_m + o.x_pair.far_m == doctest::Approx(10.0));
        CHECK(received_power_complex_single(o.x_pair.far_m, t, cfg) == doctest::Approx(o.power_w).epsilon(1e-9));
        CHECK_FALSE(o.candidates.empty());
    }
}

TEST_CASE("fixed-phase optimizer recovers mid-link at the joint phase") {
    const ScenarioConfig cfg = ScenarioConfig::single_element_defaults();
    const SingleOptimum j = joint_optimum_single(cfg);
    const OptimizationOutcome o = optimal_location_fixed_phase(j.theta, cfg);
    CHECK(std::abs(o.x_m - 5.0) < 1e-3);
    CHECK(o.power_w == doctest::Approx(j.power_w).epsilon(1e-9));
}

TEST_CASE("fixed-phase optimizer over random scenarios") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 25; ++n) {
        ScenarioParams p;
        p.transmit_power_w = 1.0 + 5.0 * u(rng);
        p.link_distance_m = 4.0 + 30.0 * u(rng);
        p.wavelength_m = 0.05 + 0.5 * u(rng);
        p.offset_height_m = 0.5 + 6.0 * u(rng);
        p.panel_area_m2.reset();
        p.reflection_coeff = 0.2 + 2.0 * u(rng);
        const ScenarioConfig cfg(p);
        const double t = kTwoPi * u(rng);
        const OptimizationOutcome o = optimal_location_fixed_phase(t, cfg);
        const GridOptimum1 g = grid_search_single_location(cfg, t, location_grid(cfg, 20001), 1);
        CAPTURE(n);
        CHECK(o.power_w >= 0.98 * g.power_w);
    }
}

TEST_CASE("fixed-phase optimizer input checks") {
    const ScenarioConfig cfg = ScenarioConfig::single_element_defaults();
    CHECK_THROWS_AS(optimal_location_fixed_phase(-0.1, cfg), Error);
    CHECK_THROWS_AS(optimal_location_fixed_phase(kTwoPi, cfg), Error);
}
