#pragma once

#include "aircover/geometry.hpp"

namespace aircover {

/// Down-tilted vertical radiation pattern of a terrestrial base station.
/// Angles are depression angles: positive points below the node's horizontal,
/// so a +6 degree etilt aims at ground users.
struct VerticalPattern {
    double etilt_deg = 6.0;
    double hpbw_deg = 10.0;  // half-power beamwidth
    double sla_v_dB = 20.0;  // side-lobe attenuation floor
};

/// Pattern attenuation at depression angle theta:
/// -min(12 ((theta - etilt) / hpbw)^2, SLA_V). Always in [-SLA_V, 0].
/// theta_deg must lie in [-90, 90].
double vertical_attenuation(double theta_deg, const VerticalPattern& pattern);

/// Depression angle of the aircraft as seen from the node: the negation of
/// elevation_seen_from_node, so an aircraft below the node gives a positive
/// angle (toward boresight of a down-tilted pattern) and an aircraft above
/// gives a negative one.
double pattern_angle_for_aircraft(double aircraft_height_m, double node_height_m,
                                  double ground_range_m, const EarthModel& earth = {});

} // namespace aircover
