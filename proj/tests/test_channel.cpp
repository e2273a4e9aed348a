#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "irs/channel.hpp"
#include "irs/error.hpp"
#include "irs/polynomial.hpp"

using namespace irs;

namespace {

ScenarioConfig two_ray(double D, double h) {
    ScenarioParams p;
    p.link_distance_m = D;
    p.offset_height_m = h;
    p.reflection_coeff = 1.0;
    return ScenarioConfig(p);
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected irs::Error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("scenario defaults and invariants") {
    const ScenarioConfig cfg = ScenarioConfig::single_element_defaults();
    CHECK(cfg.transmit_power_w() == 2.0);
    CHECK(cfg.link_distance_m() == 10.0);
    CHECK(cfg.wavenumber() == doctest::Approx(2.0 * std::numbers::pi / 0.3278).epsilon(1e-15));
    CHECK(cfg.tx_gain() == 1.0);
    CHECK(cfg.rx_gain() == 1.0);
    CHECK(cfg.tx_end_reflection() == 0.0);
    CHECK(cfg.reflection_coeff() == doctest::Approx(3.3572607882021916).epsilon(1e-14));

    ScenarioParams bad;
    bad.link_distance_m = -1.0;
    try {
        ScenarioConfig{bad};
        FAIL("expected validation error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationError);
        CHECK(std::string(e.what()).find("link_distance_m") != std::string::npos);
    }
}

TEST_CASE("wrap_phase is a floored modulo into [0, 2pi)") {
    CHECK(wrap_phase(0.0) == 0.0);
    CHECK(wrap_phase(kTwoPi) == 0.0);
    CHECK(wrap_phase(-1e-18) == 0.0);
    CHECK(wrap_phase(-1.0) == doctest::Approx(kTwoPi - 1.0));
    CHECK(wrap_phase(7.0) == doctest::Approx(7.0 - kTwoPi));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int n = 0; n < 1000; ++n) {
        const double w = wrap_phase(u(rng));
        CHECK(w >= 0.0);
        CHECK(w < kTwoPi);
    }
}

TEST_CASE("rcs_from_area") {
    CHECK(rcs_from_area(8.0) == doctest::Approx(11.2712).epsilon(1e-14));
    CHECK(rcs_from_area(6.0) == doctest::Approx(5.8634).epsilon(1e-14));
    CHECK(rcs_from_area(0.0, RcsFit{1.0, 0.0, 0.0}) == 0.0);
    CHECK(rcs_from_area(1.0) < 0.0);
}

TEST_CASE("reflection_coefficient_from_area") {
    CHECK(reflection_coefficient_from_area(8.0) == doctest::Approx(3.3572607882021916).epsilon(1e-14));
    CHECK(code_of([] { reflection_coefficient_from_area(1.0); }) == ErrorCode::NegativeRcs);

    // Root of the canonical quadratic, found by our own root finder.
    const RcsFit fit = RcsFit::canonical();
    const auto roots = Polynomial{fit.c0, fit.c1, fit.c2}.real_roots_in(0.0, 10.0);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == doctest::Approx(2.204357955917902).epsilon(1e-12));
    CHECK(reflection_coefficient_from_area(roots[0] + 1e-12) < 1e-4);

    for (double s : {2.5, 4.0, 8.0, 17.0, 96.0}) {
        const double g = reflection_coefficient_from_area(s);
        CHECK(g * g == doctest::Approx(rcs_from_area(s)).epsilon(1e-14));
    }
}

TEST_CASE("fit_rcs_quadratic") {
    SUBCASE("exact parabola") {
        const std::vector<AreaRcsPoint> pts{{1, 1}, {2, 4}, {3, 9}, {5, 25}};
        const RcsFit f = fit_rcs_quadratic(pts);
        CHECK(f.c2 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(f.c1) < 1e-10);
        CHECK(std::abs(f.c0) < 1e-10);
    }
    SUBCASE("collinear points degenerate to a line") {
        const std::vector<AreaRcsPoint> pts{{0, 1}, {1, 3}, {2, 5}};
        const RcsFit f = fit_rcs_quadratic(pts);
        CHECK(std::abs(f.c2) < 1e-12);
        CHECK(f.c1 == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(f.c0 == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("aircraft table refit differs from the canonical coefficients") {
        // Reference values from an independent numpy lstsq on the same four rows.
        const std::vector<AreaRcsPoint> pts{{96, 6}, {68.64, 2}, {39.862, 1}, {20.224, 0.5}};
        const RcsFit f = fit_rcs_quadratic(pts);
        CHECK(f.c2 == doctest::Approx(0.0012755239442964058).epsilon(1e-10));
        CHECK(f.c1 == doctest::Approx(-0.0792670435681438).epsilon(1e-10));
        CHECK(f.c0 == doctest::Approx(1.7500217736392987).epsilon(1e-10));
        CHECK(f.c2 != doctest::Approx(RcsFit::canonical().c2));
    }
    SUBCASE("degenerate input") {
        const std::vector<AreaRcsPoint> two{{1, 1}, {2, 2}};
        CHECK(code_of([&] { fit_rcs_quadratic(two); }) == ErrorCode::DegenerateSystem);
        const std::vector<AreaRcsPoint> repeated{{1, 1}, {1, 2}, {2, 2}, {2, 3}};
        CHECK(code_of([&] { fit_rcs_quadratic(repeated); }) == ErrorCode::DegenerateSystem);
    }
}

TEST_CASE("two_ray_path_length") {
    const ScenarioConfig cfg = two_ray(10.0, 4.0);
    CHECK(two_ray_path_length(5.0, cfg) == doctest::Approx(12.806248474865697).epsilon(1e-15));
    CHECK(two_ray_path_length(0.0, two_ray(10.0, 0.0)) == 10.0);
    CHECK(two_ray_min_path_length(cfg) == doctest::Approx(2.0 * std::sqrt(16.0 + 25.0)));
    CHECK(two_ray_max_path_length(cfg) == doctest::Approx(4.0 + std::sqrt(116.0)));
    CHECK(code_of([&] { two_ray_path_length(-0.1, cfg); }) == ErrorCode::OutOfRange);
    CHECK(code_of([&] { two_ray_path_length(10.1, cfg); }) == ErrorCode::OutOfRange);
}

TEST_CASE("two_ray_path_length is strictly convex with minimizer D/2") {
    const ScenarioConfig cfg = two_ray(10.0, 4.0);
    const double h = 1e-3;
    std::size_t arg = 0;
    double best = 1e300;
    const std::size_t n = 2001;
    for (std::size_t g = 0; g < n; ++g) {
        const double x = 10.0 * static_cast<double>(g) / static_cast<double>(n - 1);
        const double d = two_ray_path_length(x, cfg);
        if (d < best) {
            best = d;
            arg = g;
        }
        if (x > h && x < 10.0 - h) {
            const double second = (two_ray_path_length(x + h, cfg) - 2.0 * d + two_ray_path_length(x - h, cfg)) / (h * h);
            CHECK(second > 0.0);
        }
    }
    CHECK(std::abs(10.0 * static_cast<double>(arg) / (n - 1) - 5.0) <= 10.0 / (n - 1));
}

TEST_CASE("element_path_length") {
    ScenarioParams p;
    p.link_distance_m = 10.0;
    p.reflection_coeff = 1.0;
    const ScenarioConfig cfg(p);
    const PanelGeometry panel(2, 3, 0.5, 0.0, 0.0, 0.0);
    CHECK(element_path_length(0, 0, panel, cfg) == doctest::Approx(10.220255576406771).epsilon(1e-14));
    CHECK(code_of([&] { element_path_length(2, 0, panel, cfg); }) == ErrorCode::IndexOutOfBounds);
    CHECK(code_of([&] { element_path_length(0, 3, panel, cfg); }) == ErrorCode::IndexOutOfBounds);

    SUBCASE("single tiny element collapses to the two-ray path") {
        const ScenarioConfig tr = two_ray(10.0, 4.0);
        const double a = 1e-9;
        const PanelGeometry one(1, 1, a, 3.0 - a, 0.0, 4.0 - a);
        CHECK(element_path_length(0, 0, one, tr) == doctest::Approx(two_ray_path_length(3.0, tr)).epsilon(1e-14));
    }
    SUBCASE("binding element is in the top row at an extreme column") {
        const ScenarioConfig multi = ScenarioConfig::multi_element_defaults();
        const PanelGeometry left = PanelGeometry::multi_element_defaults().moved_to(20.0);
        const PanelGeometry right = left.moved_to(70.0);
        const auto all_left = element_path_lengths(left, multi);
        const auto all_right = element_path_lengths(right, multi);
        const double top_first = element_path_length(19, 0, left, multi);
        const double top_last = element_path_length(19, 19, right, multi);
        for (double d : all_left) CHECK(d <= top_first);
        for (double d : all_right) CHECK(d <= top_last);
    }
}

TEST_CASE("element_path_length is strictly convex in the panel location") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const ScenarioConfig cfg = ScenarioConfig::multi_element_defaults();
    const double step = 1e-2;
    for (int n = 0; n < 100; ++n) {
        const double x = 1.0 + 97.0 * u(rng);
        const PanelGeometry base(4, 5, 0.01 + 0.05 * u(rng), x, 2.0 * u(rng), 10.0 * u(rng));
        const std::size_t i = static_cast<std::size_t>(u(rng) * 4.0);
        const std::size_t j = static_cast<std::size_t>(u(rng) * 5.0);
        const double mid = element_path_length(i, j, base, cfg);
        const double plus = element_path_length(i, j, base.moved_to(x + step), cfg);
        const double minus = element_path_length(i, j, base.moved_to(x - step), cfg);
        CHECK((plus - 2.0 * mid + minus) / (step * step) > 0.0);
    }
}

TEST_CASE("location_from_path_length") {
    const ScenarioConfig cfg = two_ray(10.0, 4.0);
    const double d_min = two_ray_min_path_length(cfg);

    const LocationPair tangent = location_from_path_length(d_min, cfg);
    CHECK(tangent.near_m == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(tangent.far_m == doctest::Approx(5.0).epsilon(1e-12));

    const LocationPair pair = location_from_path_length(13.0, cfg);
    CHECK(pair.near_m < 5.0);
    CHECK(pair.near_m + pair.far_m == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(std::abs(two_ray_path_length(pair.near_m, cfg) - 13.0) <= 1e-9 * 13.0);
    CHECK(std::abs(two_ray_path_length(pair.far_m, cfg) - 13.0) <= 1e-9 * 13.0);

    CHECK(code_of([&] { location_from_path_length(100.0, cfg); }) == ErrorCode::Infeasible);
    CHECK(code_of([&] { location_from_path_length(d_min - 1e-3, cfg); }) == ErrorCode::Infeasible);
}

TEST_CASE("location_from_path_length inverts two_ray_path_length") {
    const ScenarioConfig cfg = two_ray(10.0, 4.0);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int n = 0; n < 1000; ++n) {
        const double x = u(rng);
        const LocationPair pair = location_from_path_length(two_ray_path_length(x, cfg), cfg);
        const double err = std::min(std::abs(pair.near_m - x), std::abs(pair.far_m - x));
        CHECK(err < 1e-8);
    }
}
