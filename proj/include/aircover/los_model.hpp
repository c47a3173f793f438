#pragma once

#include <vector>

namespace aircover {

/// Statistical city used by the line-of-sight model: fraction of land that is
/// built up, mean building density, and the Rayleigh scale of the
/// building-height distribution.
struct UrbanEnvironment {
    double alpha = 0.3;           // built-up area ratio, in (0, 1]
    double beta_per_km2 = 500.0;  // buildings per square kilometer
    double gamma_m = 15.0;        // Rayleigh scale of building heights
};

/// The evenly spaced obstruction points a ray crosses between transmitter and
/// receiver, with the ray height at each one.
struct RayProfile {
    int building_count = 0;
    double spacing_m = 0.0;
    std::vector<double> building_distances_m;
    std::vector<double> ray_heights_m;
};

enum class LosMode {
    Fast,  ///< may skip factors within 1e-12 of one (long, climbing rays)
    Exact, ///< multiplies every factor; used as the in-library reference
};

/// Buildings crossed per kilometer of ray path: sqrt(alpha * beta).
double buildings_per_km(const UrbanEnvironment& env);

/// Buildings crossed over a ray of the given ground range: floor(r_km * b1).
int building_count(double ground_range_km, double b1_per_km);

/// Obstruction points at (i + 1/2) * spacing with the ray height linearly
/// interpolated from h_tx at 0 to h_rx at ground_range. Empty when the range
/// crosses no building.
RayProfile ray_profile(const UrbanEnvironment& env, double h_tx_m, double h_rx_m,
                       double ground_range_m);

/// Probability that a Rayleigh(gamma) building stays below the ray height.
/// Negative ray heights count as certain blockage.
double clearance_probability(double ray_height_m, double gamma_m);

/// Probability that the ray clears every building in its profile; exactly 1
/// for an empty profile. Accumulated in log space.
double los_probability(const UrbanEnvironment& env, double h_tx_m, double h_rx_m,
                       double ground_range_m, LosMode mode = LosMode::Fast);

/// Diagnostic: the running clearance product after each obstruction point
/// (exact mode, one entry per building).
std::vector<double> prefix_los_probabilities(const UrbanEnvironment& env, double h_tx_m,
                                             double h_rx_m, double ground_range_m);

} // namespace aircover
