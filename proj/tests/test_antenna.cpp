#include "aircover/antenna.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace aircover;

namespace {
const VerticalPattern kPattern{6.0, 10.0, 20.0};
}

TEST_CASE("vertical attenuation spot values") {
    CHECK(vertical_attenuation(6.0, kPattern) == 0.0);
    CHECK(vertical_attenuation(11.0, kPattern) == -3.0);
    CHECK(vertical_attenuation(1.0, kPattern) == -3.0);
    CHECK(vertical_attenuation(30.0, kPattern) == -20.0);
    CHECK(vertical_attenuation(-30.0, kPattern) == -20.0);
}

TEST_CASE("attenuation floor engages past the beam edge") {
    // floor boundary at hpbw * sqrt(SLA/12) off boresight
    const double edge = 10.0 * std::sqrt(20.0 / 12.0);
    CHECK(vertical_attenuation(6.0 + edge + 0.001, kPattern) == -20.0);
    CHECK(vertical_attenuation(6.0 + 12.91, kPattern) == -20.0);
    CHECK(vertical_attenuation(6.0 - 12.91, kPattern) == -20.0);
    CHECK(vertical_attenuation(6.0 + edge - 0.001, kPattern) > -20.0);
}

TEST_CASE("attenuation is symmetric about the tilt and bounded") {
    std::mt19937 rng(112358);
    std::uniform_real_distribution<double> offset(0.0, 84.0);
    for (int i = 0; i < 10000; ++i) {
        const double x = offset(rng);
        const double up = vertical_attenuation(6.0 + x, kPattern);
        const double down = vertical_attenuation(6.0 - x, kPattern);
        CHECK(std::abs(up - down) < 1e-12);
        CHECK(up <= 0.0);
        CHECK(up >= -kPattern.sla_v_dB);
    }
}

TEST_CASE("attenuation is non-increasing away from boresight") {
    double prev = 0.0;
    for (double x = 0.0; 6.0 + x <= 90.0; x += 0.25) {
        const double a = vertical_attenuation(6.0 + x, kPattern);
        CHECK(a <= prev + 1e-15);
        prev = a;
    }
}

TEST_CASE("angles outside the pattern domain are rejected") {
    CHECK_THROWS_AS(vertical_attenuation(90.5, kPattern), std::domain_error);
    CHECK_THROWS_AS(vertical_attenuation(-91.0, kPattern), std::domain_error);
    CHECK_THROWS_AS(vertical_attenuation(0.0, VerticalPattern{6.0, 0.0, 20.0}),
                    std::domain_error);
    CHECK_THROWS_AS(vertical_attenuation(0.0, VerticalPattern{6.0, 10.0, -1.0}),
                    std::domain_error);
}

TEST_CASE("pattern angle is the depression angle at the node") {
    CHECK(pattern_angle_for_aircraft(5.0, 25.0, 500.0) ==
          doctest::Approx(2.29).epsilon(0.05 / 2.29));
    CHECK(std::abs(pattern_angle_for_aircraft(25.0, 25.0, 1000.0)) < 0.05);
    CHECK(pattern_angle_for_aircraft(230.0, 25.0, 2000.0) ==
          doctest::Approx(-5.855).epsilon(0.05 / 5.855));
    CHECK_THROWS_AS(pattern_angle_for_aircraft(5.0, 25.0, 0.0), std::domain_error);
}

TEST_CASE("a high aircraft sees far more attenuation than a level one") {
    const double high = vertical_attenuation(
        pattern_angle_for_aircraft(230.0, 25.0, 2000.0), kPattern);
    const double level = vertical_attenuation(
        pattern_angle_for_aircraft(25.0, 25.0, 2000.0), kPattern);
    CHECK(level - high >= 10.0);
}
