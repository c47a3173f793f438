#include "aircover/antenna.hpp"

#include <algorithm>
#include <stdexcept>

namespace aircover {

double vertical_attenuation(double theta_deg, const VerticalPattern& pattern) {
    if (!(pattern.hpbw_deg > 0.0)) {
        throw std::domain_error("vertical pattern: hpbw_deg must be > 0");
    }
    if (!(pattern.sla_v_dB >= 0.0)) {
        throw std::domain_error("vertical pattern: sla_v_dB must be >= 0");
    }
    if (!(theta_deg >= -90.0) || !(theta_deg <= 90.0)) {
        throw std::domain_error("vertical_attenuation: theta must be in [-90, 90] degrees");
    }
    const double offset = (theta_deg - pattern.etilt_deg) / pattern.hpbw_deg;
    return -std::min(12.0 * offset * offset, pattern.sla_v_dB);
}

double pattern_angle_for_aircraft(double aircraft_height_m, double node_height_m,
                                  double ground_range_m, const EarthModel& earth) {
    return -elevation_seen_from_node(aircraft_height_m, node_height_m, ground_range_m, earth);
}

} // namespace aircover
