#pragma once

namespace aircover {

/// Effective-Earth model for the curved (satellite) link geometry.
///
/// Rays are treated as straight lines over a sphere of radius
/// true_radius_m * k_factor. The default k = 4/3 is the standard
/// radio-horizon convention for a standard atmosphere; it is exposed here so
/// alternative curvature assumptions can be tested from configuration.
struct EarthModel {
    double true_radius_m = 6371000.0;
    double k_factor = 4.0 / 3.0;

    double effective_radius_m() const { return true_radius_m * k_factor; }
};

/// Resolved geometry of one aircraft-to-node ray.
///
/// For satellite links all five fields are derived from (heights, elevation);
/// for terrestrial links slant and ground range come from the flat formula
/// and elevation_deg is the flat-earth elevation of the node seen from the
/// aircraft.
struct SatLinkGeometry {
    double aircraft_height_m = 0.0;
    double node_height_m = 0.0;
    double elevation_deg = 90.0;
    double slant_range_m = 0.0;
    double ground_range_m = 0.0;
};

/// Straight-ray distance from the aircraft to a node seen at elevation
/// `elevation_deg` above the aircraft's local horizontal, over the effective
/// sphere. Exactly node_height_m - aircraft_height_m at 90 degrees.
///
/// Requires 0 <= aircraft_height_m < node_height_m and
/// 0 < elevation_deg <= 90; throws std::domain_error otherwise.
double slant_range(double aircraft_height_m, double node_height_m,
                   double elevation_deg, const EarthModel& earth = {});

/// Great-circle arc at the effective-Earth surface between the two
/// endpoints' nadir points. Zero exactly when the node is at zenith.
/// Preconditions as slant_range.
double ground_range(double aircraft_height_m, double node_height_m,
                    double elevation_deg, const EarthModel& earth = {});

/// slant_range and ground_range bundled with their inputs.
SatLinkGeometry sat_link_geometry(double aircraft_height_m, double node_height_m,
                                  double elevation_deg, const EarthModel& earth = {});

/// Terrestrial link distance: flat-earth hypotenuse of the horizontal ground
/// range (given in km) and the height difference. No curvature term.
double tn_slant_range(double aircraft_height_m, double node_height_m,
                      double ground_range_km);

/// Flat-geometry counterpart of sat_link_geometry for terrestrial links.
SatLinkGeometry tn_link_geometry(double aircraft_height_m, double node_height_m,
                                 double ground_range_km);

/// Signed elevation of the aircraft above (+) or below (-) the local
/// horizontal at the node, over the effective sphere. Matches the flat form
/// atan((h_aircraft - h_node) / ground_range) to within 0.05 degrees for
/// ranges up to 2 km. Throws std::domain_error when ground_range_m <= 0.
double elevation_seen_from_node(double aircraft_height_m, double node_height_m,
                                double ground_range_m, const EarthModel& earth = {});

/// Inverse of slant_range: elevation angle at the aircraft that produces the
/// given slant range to the node. Used for round-trip consistency checks.
double elevation_from_slant_range(double aircraft_height_m, double node_height_m,
                                  double slant_range_m, const EarthModel& earth = {});

} // namespace aircover
