#include "aircover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aircover {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg2rad(double deg) { return deg * kPi / 180.0; }
double rad2deg(double rad) { return rad * 180.0 / kPi; }

void check_earth(const EarthModel& earth) {
    if (!(earth.true_radius_m > 0.0)) {
        throw std::domain_error("earth model: true_radius_m must be > 0");
    }
    if (!(earth.k_factor >= 1.0)) {
        throw std::domain_error("earth model: k_factor must be >= 1");
    }
}

void check_sat_inputs(double aircraft_height_m, double node_height_m,
                      double elevation_deg, const EarthModel& earth) {
    check_earth(earth);
    if (!(aircraft_height_m >= 0.0) || !(aircraft_height_m < node_height_m)) {
        throw std::domain_error("slant geometry: requires 0 <= aircraft height < node height, got " +
                                std::to_string(aircraft_height_m) + " and " +
                                std::to_string(node_height_m));
    }
    if (!(elevation_deg > 0.0) || !(elevation_deg <= 90.0)) {
        throw std::domain_error("slant geometry: elevation must be in (0, 90] degrees, got " +
                                std::to_string(elevation_deg));
    }
}

} // namespace

double slant_range(double aircraft_height_m, double node_height_m,
                   double elevation_deg, const EarthModel& earth) {
    check_sat_inputs(aircraft_height_m, node_height_m, elevation_deg, earth);
    if (elevation_deg == 90.0) {
        return node_height_m - aircraft_height_m;
    }
    const double r_eff = earth.effective_radius_m();
    const double r_air = r_eff + aircraft_height_m;
    const double r_node = r_eff + node_height_m;
    // Positive root of d^2 + 2 d r_air sin(el) - (r_node^2 - r_air^2) = 0,
    // written as c / (b + sqrt(b^2 + c)) so the flat-earth limit (k -> inf)
    // stays free of cancellation.
    const double b = r_air * std::sin(deg2rad(elevation_deg));
    const double c = (r_node - r_air) * (r_node + r_air);
    return c / (b + std::sqrt(b * b + c));
}

double ground_range(double aircraft_height_m, double node_height_m,
                    double elevation_deg, const EarthModel& earth) {
    const double d = slant_range(aircraft_height_m, node_height_m, elevation_deg, earth);
    if (elevation_deg == 90.0) {
        return 0.0;
    }
    const double r_eff = earth.effective_radius_m();
    const double r_node = r_eff + node_height_m;
    // Central angle from the spherical triangle (law of sines); the angle at
    // the node stays acute for elevation > 0, so asin is unambiguous.
    const double s = std::clamp(d * std::cos(deg2rad(elevation_deg)) / r_node, -1.0, 1.0);
    return r_eff * std::asin(s);
}

SatLinkGeometry sat_link_geometry(double aircraft_height_m, double node_height_m,
                                  double elevation_deg, const EarthModel& earth) {
    SatLinkGeometry g;
    g.aircraft_height_m = aircraft_height_m;
    g.node_height_m = node_height_m;
    g.elevation_deg = elevation_deg;
    g.slant_range_m = slant_range(aircraft_height_m, node_height_m, elevation_deg, earth);
    g.ground_range_m = ground_range(aircraft_height_m, node_height_m, elevation_deg, earth);
    return g;
}

double tn_slant_range(double aircraft_height_m, double node_height_m,
                      double ground_range_km) {
    if (!(ground_range_km >= 0.0)) {
        throw std::domain_error("tn_slant_range: ground_range_km must be >= 0");
    }
    if (!(aircraft_height_m >= 0.0) || !(node_height_m >= 0.0)) {
        throw std::domain_error("tn_slant_range: heights must be >= 0");
    }
    return std::hypot(ground_range_km * 1000.0, std::abs(aircraft_height_m - node_height_m));
}

SatLinkGeometry tn_link_geometry(double aircraft_height_m, double node_height_m,
                                 double ground_range_km) {
    SatLinkGeometry g;
    g.aircraft_height_m = aircraft_height_m;
    g.node_height_m = node_height_m;
    g.ground_range_m = ground_range_km * 1000.0;
    g.slant_range_m = tn_slant_range(aircraft_height_m, node_height_m, ground_range_km);
    g.elevation_deg = rad2deg(std::atan2(node_height_m - aircraft_height_m, g.ground_range_m));
    return g;
}

double elevation_seen_from_node(double aircraft_height_m, double node_height_m,
                                double ground_range_m, const EarthModel& earth) {
    check_earth(earth);
    if (!(ground_range_m > 0.0)) {
        throw std::domain_error("elevation_seen_from_node: ground_range_m must be > 0");
    }
    const double r_eff = earth.effective_radius_m();
    const double phi = ground_range_m / r_eff;
    const double r_air = r_eff + aircraft_height_m;
    const double r_node = r_eff + node_height_m;
    // Node at the origin of its local frame: x along the surface toward the
    // aircraft's nadir, y along the local vertical.
    const double x = r_air * std::sin(phi);
    const double y = r_air * std::cos(phi) - r_node;
    return rad2deg(std::atan2(y, x));
}

double elevation_from_slant_range(double aircraft_height_m, double node_height_m,
                                  double slant_range_m, const EarthModel& earth) {
    check_earth(earth);
    if (!(slant_range_m > 0.0)) {
        throw std::domain_error("elevation_from_slant_range: slant_range_m must be > 0");
    }
    const double r_eff = earth.effective_radius_m();
    const double r_air = r_eff + aircraft_height_m;
    const double r_node = r_eff + node_height_m;
    const double c = (r_node - r_air) * (r_node + r_air);
    const double s = (c - slant_range_m * slant_range_m) / (2.0 * r_air * slant_range_m);
    return rad2deg(std::asin(std::clamp(s, -1.0, 1.0)));
}

} // namespace aircover
