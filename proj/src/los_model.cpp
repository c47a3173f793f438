#include "aircover/los_model.hpp"

#include <cmath>
#include <stdexcept>

namespace aircover {

namespace {

void check_env(const UrbanEnvironment& env) {
    if (!(env.alpha > 0.0) || !(env.alpha <= 1.0)) {
        throw std::domain_error("urban environment: alpha must be in (0, 1]");
    }
    if (!(env.beta_per_km2 > 0.0)) {
        throw std::domain_error("urban environment: beta_per_km2 must be > 0");
    }
    if (!(env.gamma_m > 0.0)) {
        throw std::domain_error("urban environment: gamma_m must be > 0");
    }
}

} // namespace

double buildings_per_km(const UrbanEnvironment& env) {
    check_env(env);
    return std::sqrt(env.alpha * env.beta_per_km2);
}

int building_count(double ground_range_km, double b1_per_km) {
    if (!(ground_range_km >= 0.0)) {
        throw std::domain_error("building_count: ground_range_km must be >= 0");
    }
    return static_cast<int>(std::floor(ground_range_km * b1_per_km));
}

RayProfile ray_profile(const UrbanEnvironment& env, double h_tx_m, double h_rx_m,
                       double ground_range_m) {
    check_env(env);
    if (!(ground_range_m >= 0.0)) {
        throw std::domain_error("ray_profile: ground_range_m must be >= 0");
    }
    RayProfile profile;
    profile.building_count = building_count(ground_range_m / 1000.0, buildings_per_km(env));
    if (profile.building_count < 1) {
        return profile;
    }
    profile.spacing_m = ground_range_m / profile.building_count;
    profile.building_distances_m.reserve(profile.building_count);
    profile.ray_heights_m.reserve(profile.building_count);
    const double slope = (h_tx_m - h_rx_m) / ground_range_m;
    for (int i = 0; i < profile.building_count; ++i) {
        const double d = (i + 0.5) * profile.spacing_m;
        profile.building_distances_m.push_back(d);
        profile.ray_heights_m.push_back(h_tx_m - d * slope);
    }
    return profile;
}

double clearance_probability(double ray_height_m, double gamma_m) {
    if (!(gamma_m > 0.0)) {
        throw std::domain_error("clearance_probability: gamma_m must be > 0");
    }
    if (ray_height_m <= 0.0) {
        return 0.0; // at or below ground: always blocked
    }
    const double x = ray_height_m * ray_height_m / (2.0 * gamma_m * gamma_m);
    const double p = -std::expm1(-x);
    return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

double los_probability(const UrbanEnvironment& env, double h_tx_m, double h_rx_m,
                       double ground_range_m, LosMode mode) {
    check_env(env);
    if (!(ground_range_m >= 0.0)) {
        throw std::domain_error("los_probability: ground_range_m must be >= 0");
    }
    const int count = building_count(ground_range_m / 1000.0, buildings_per_km(env));
    if (count < 1) {
        return 1.0;
    }
    const double spacing = ground_range_m / count;
    const double slope = (h_tx_m - h_rx_m) / ground_range_m;
    const bool climbing = h_rx_m >= h_tx_m;
    const double skip_above = 10.0 * env.gamma_m;

    double log_sum = 0.0;
    for (int i = 0; i < count; ++i) {
        const double h = h_tx_m - (i + 0.5) * spacing * slope;
        if (mode == LosMode::Fast && climbing && h > skip_above) {
            // Every later point is at least this high; each remaining factor
            // differs from 1 by < exp(-50), so the tail is negligible.
            break;
        }
        const double p = clearance_probability(h, env.gamma_m);
        if (p <= 0.0) {
            return 0.0;
        }
        log_sum += std::log(p);
    }
    return std::exp(log_sum);
}

std::vector<double> prefix_los_probabilities(const UrbanEnvironment& env, double h_tx_m,
                                             double h_rx_m, double ground_range_m) {
    const RayProfile profile = ray_profile(env, h_tx_m, h_rx_m, ground_range_m);
    std::vector<double> prefixes;
    prefixes.reserve(profile.ray_heights_m.size());
    double running = 1.0;
    for (double h : profile.ray_heights_m) {
        running *= clearance_probability(h, env.gamma_m);
        prefixes.push_back(running);
    }
    return prefixes;
}

} // namespace aircover
