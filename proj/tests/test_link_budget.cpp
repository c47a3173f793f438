#include "aircover/link_budget.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

using namespace aircover;

TEST_CASE("received power follows the dB Friis form") {
    CHECK(std::abs(received_power(RadioTerminal{23.0, 0.0, 38.0, -102.4}, 0.0, 152.01) -
                   (-91.01)) < 0.1);
    CHECK(received_power(RadioTerminal{0.0, 0.0, 0.0, 0.0}, 0.0, 0.0) == 0.0);
    CHECK(std::abs(received_power(RadioTerminal{23.0, 0.0, 8.0, -100.0}, -1.27, 135.0) -
                   (-105.27)) < 0.3);
}

TEST_CASE("coverage verdict is inclusive at the threshold") {
    const CoverageVerdict a = coverage_verdict(-91.0, -102.4);
    CHECK(a.covered);
    CHECK(a.margin_dB == doctest::Approx(11.4).epsilon(1e-12));

    const CoverageVerdict boundary = coverage_verdict(-102.4, -102.4);
    CHECK(boundary.covered);
    CHECK(boundary.margin_dB == 0.0);

    const CoverageVerdict below = coverage_verdict(-103.3, -102.4);
    CHECK_FALSE(below.covered);
    CHECK(below.margin_dB == doctest::Approx(-0.9).epsilon(1e-12));
}

TEST_CASE("rssi is linear in transmit power and receive gain") {
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> power(-10.0, 40.0);
    std::uniform_real_distribution<double> loss(60.0, 200.0);
    std::uniform_real_distribution<double> shift(0.1, 20.0);
    for (int i = 0; i < 1000; ++i) {
        RadioTerminal t{power(rng), 0.0, 38.0, -102.4};
        const double pl = loss(rng);
        const double x = shift(rng);
        const double base = received_power(t, 0.0, pl);
        RadioTerminal boosted = t;
        boosted.tx_power_dBm += x;
        CHECK(received_power(boosted, 0.0, pl) - base == doctest::Approx(x).epsilon(1e-12));

        RadioTerminal gain40 = t;
        gain40.rx_gain_dBi = 40.0;
        CHECK(received_power(gain40, 0.0, pl) - base == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("verdict is monotone in rssi") {
    std::mt19937 rng(14142);
    std::uniform_real_distribution<double> rssi(-130.0, -70.0);
    for (int i = 0; i < 1000; ++i) {
        double a = rssi(rng);
        double b = rssi(rng);
        if (a > b) {
            std::swap(a, b);
        }
        if (coverage_verdict(a, -102.4).covered) {
            CHECK(coverage_verdict(b, -102.4).covered);
        }
    }
}

TEST_CASE("link budget bundles rssi, margin, and verdict") {
    const LinkBudgetResult r = link_budget(RadioTerminal{23.0, 0.0, 38.0, -102.4}, 0.0, 152.01);
    CHECK(r.rssi_dBm == received_power(RadioTerminal{23.0, 0.0, 38.0, -102.4}, 0.0, 152.01));
    CHECK(r.margin_dB == doctest::Approx(r.rssi_dBm + 102.4).epsilon(1e-12));
    CHECK(r.covered);
    CHECK(r.path_loss_dB == 152.01);
    CHECK(r.antenna_gain_dB == 0.0);
}

TEST_CASE("non-finite budget inputs are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(received_power(RadioTerminal{nan, 0.0, 0.0, -100.0}, 0.0, 100.0),
                    std::domain_error);
    CHECK_THROWS_AS(received_power(RadioTerminal{23.0, 0.0, 0.0, -100.0}, inf, 100.0),
                    std::domain_error);
    CHECK_THROWS_AS(coverage_verdict(nan, -100.0), std::domain_error);
}
