#include "aircover/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace aircover;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent spherical-triangle computation of the surface arc between the
// endpoints' nadir points, used as the oracle for ground_range.
double ground_range_oracle(double h_a, double h_n, double el_deg, const EarthModel& earth) {
    const double r_eff = earth.effective_radius_m();
    const double d = slant_range(h_a, h_n, el_deg, earth);
    return r_eff * std::asin(d * std::cos(el_deg * kPi / 180.0) / (r_eff + h_n));
}

} // namespace

TEST_CASE("slant range reproduces the published LEO distances") {
    const EarthModel earth{};
    CHECK(std::abs(slant_range(0.0, 300000.0, 10.0, earth) - 1237000.0) < 2000.0);
    CHECK(std::abs(slant_range(0.0, 300000.0, 30.0, earth) - 572000.0) < 2000.0);
    CHECK(slant_range(0.0, 300000.0, 90.0, earth) == 300000.0);
}

TEST_CASE("slant range at zenith is exactly the height difference") {
    const EarthModel earth{};
    CHECK(slant_range(0.0, 300000.0, 90.0, earth) == 300000.0);
    CHECK(slant_range(12.5, 250.0, 90.0, earth) == 237.5);
    CHECK(slant_range(1.0, 300000.0, 90.0, EarthModel{1.0, 1.0}) == 299999.0);
}

TEST_CASE("slant range rejects bad inputs") {
    CHECK_THROWS_AS(slant_range(0.0, 300000.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(slant_range(0.0, 300000.0, -5.0), std::domain_error);
    CHECK_THROWS_AS(slant_range(0.0, 300000.0, 90.5), std::domain_error);
    CHECK_THROWS_AS(slant_range(-1.0, 300000.0, 45.0), std::domain_error);
    CHECK_THROWS_AS(slant_range(400.0, 300.0, 45.0), std::domain_error);
    CHECK_THROWS_AS(slant_range(0.0, 300.0, 45.0, EarthModel{6371000.0, 0.5}),
                    std::domain_error);
    CHECK_THROWS_AS(slant_range(0.0, 300.0, 45.0, EarthModel{-1.0, 1.5}),
                    std::domain_error);
}

TEST_CASE("ground range matches the spherical-triangle oracle") {
    const EarthModel earth{};
    // values precomputed with ground_range_oracle
    CHECK(ground_range(0.0, 300000.0, 10.0, earth) ==
          doctest::Approx(1181735.6339001101).epsilon(1e-9));
    CHECK(ground_range(0.0, 300000.0, 30.0, earth) ==
          doctest::Approx(478780.10204214096).epsilon(1e-9));
    CHECK(ground_range(123.0, 300000.0, 90.0, earth) == 0.0);

    std::mt19937 rng(20260810);
    std::uniform_real_distribution<double> height(0.0, 400.0);
    std::uniform_real_distribution<double> node(1000.0, 400000.0);
    std::uniform_real_distribution<double> elevation(0.5, 89.5);
    for (int i = 0; i < 1000; ++i) {
        const double h_a = height(rng);
        const double h_n = h_a + node(rng);
        const double el = elevation(rng);
        const double got = ground_range(h_a, h_n, el, earth);
        const double want = ground_range_oracle(h_a, h_n, el, earth);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("ground range is zero only at zenith") {
    const EarthModel earth{};
    for (double el : {5.0, 30.0, 60.0, 89.9}) {
        CHECK(ground_range(10.0, 300000.0, el, earth) > 0.0);
    }
    CHECK(ground_range(10.0, 300000.0, 90.0, earth) == 0.0);
}

TEST_CASE("tn slant range follows the flat formula") {
    CHECK(tn_slant_range(50.0, 25.0, 0.5) == doctest::Approx(500.62460986251966).epsilon(1e-9));
    CHECK(tn_slant_range(25.0, 25.0, 1.0) == 1000.0);
    CHECK(tn_slant_range(40.0, 40.0, 0.0) == 0.0);
    CHECK_THROWS_AS(tn_slant_range(10.0, 25.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(tn_slant_range(-10.0, 25.0, 0.5), std::domain_error);
}

TEST_CASE("elevation seen from the node") {
    const EarthModel earth{};
    // flat-form references: atan(205/2000), atan(-20/500)
    CHECK(elevation_seen_from_node(230.0, 25.0, 2000.0, earth) ==
          doctest::Approx(std::atan2(205.0, 2000.0) * 180.0 / kPi).epsilon(0.05 / 5.8));
    CHECK(elevation_seen_from_node(230.0, 25.0, 2000.0, earth) ==
          doctest::Approx(5.845546820241952).epsilon(1e-12));
    CHECK(std::abs(elevation_seen_from_node(25.0, 25.0, 1000.0, earth)) < 0.05);
    CHECK(elevation_seen_from_node(5.0, 25.0, 500.0, earth) ==
          doctest::Approx(-2.29).epsilon(0.05 / 2.29));
    CHECK_THROWS_AS(elevation_seen_from_node(5.0, 25.0, 0.0, earth), std::domain_error);

    // curved and flat forms agree within 0.05 degrees out to 2 km
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> height(0.0, 400.0);
    std::uniform_real_distribution<double> range(1.0, 2000.0);
    for (int i = 0; i < 1000; ++i) {
        const double h_a = height(rng);
        const double h_n = height(rng);
        const double gr = range(rng);
        const double flat = std::atan2(h_a - h_n, gr) * 180.0 / kPi;
        CHECK(std::abs(elevation_seen_from_node(h_a, h_n, gr, earth) - flat) < 0.05);
    }
}

TEST_CASE("elevation round-trips through slant range to 1e-6 degrees") {
    const EarthModel earth{};
    std::mt19937 rng(987654);
    std::uniform_real_distribution<double> height(0.0, 5000.0);
    std::uniform_real_distribution<double> gap(1.0, 400000.0);
    std::uniform_real_distribution<double> elevation(0.1, 90.0);
    for (int i = 0; i < 1000; ++i) {
        const double h_a = height(rng);
        const double h_n = h_a + gap(rng);
        const double el = elevation(rng);
        const double d = slant_range(h_a, h_n, el, earth);
        CHECK(std::abs(elevation_from_slant_range(h_a, h_n, d, earth) - el) < 1e-6);
    }
    // zenith round-trips exactly
    const double d90 = slant_range(3.0, 300000.0, 90.0, earth);
    CHECK(elevation_from_slant_range(3.0, 300000.0, d90, earth) == 90.0);
}

TEST_CASE("slant and ground range decrease strictly with elevation") {
    const EarthModel earth{};
    double prev_slant = slant_range(10.0, 300000.0, 0.5, earth);
    double prev_ground = ground_range(10.0, 300000.0, 0.5, earth);
    for (double el = 1.0; el <= 90.0; el += 0.5) {
        const double s = slant_range(10.0, 300000.0, el, earth);
        const double g = ground_range(10.0, 300000.0, el, earth);
        CHECK(s < prev_slant);
        CHECK(g < prev_ground);
        prev_slant = s;
        prev_ground = g;
    }
}

TEST_CASE("large k approaches flat-earth geometry") {
    const EarthModel flat{6371000.0, 1e9};
    for (double el : {10.0, 20.0, 45.0, 80.0}) {
        const double want = 300000.0 / std::sin(el * kPi / 180.0);
        const double got = slant_range(0.0, 300000.0, el, flat);
        CHECK(std::abs(got - want) / want < 1e-3);
    }
}

TEST_CASE("tn link geometry bundles the flat quantities") {
    const SatLinkGeometry g = tn_link_geometry(50.0, 25.0, 0.5);
    CHECK(g.ground_range_m == 500.0);
    CHECK(g.slant_range_m == doctest::Approx(500.62460986251966).epsilon(1e-9));
    CHECK(g.aircraft_height_m == 50.0);
    CHECK(g.node_height_m == 25.0);
}

TEST_CASE("sat link geometry is self-consistent") {
    const EarthModel earth{};
    const SatLinkGeometry g = sat_link_geometry(10.0, 300000.0, 30.0, earth);
    CHECK(g.slant_range_m == slant_range(10.0, 300000.0, 30.0, earth));
    CHECK(g.ground_range_m == ground_range(10.0, 300000.0, 30.0, earth));
    CHECK(g.slant_range_m >= g.node_height_m - g.aircraft_height_m);
}
