#include "aircover/propagation.hpp"

#include <cmath>
#include <stdexcept>

namespace aircover {

PropagationParams params_for_environment(const UrbanEnvironment& env,
                                         double carrier_frequency_GHz,
                                         double sf_los_dB, double sf_nlos_dB,
                                         double cl_max_dB) {
    PropagationParams p;
    p.carrier_frequency_GHz = carrier_frequency_GHz;
    p.sf_los_dB = sf_los_dB;
    p.sf_nlos_dB = sf_nlos_dB;
    p.cl_max_dB = cl_max_dB;
    p.h0_m = 1.25 * env.gamma_m;
    return p;
}

double path_loss_los(double carrier_frequency_GHz, double slant_range_m, double sf_los_dB) {
    if (!(carrier_frequency_GHz > 0.0)) {
        throw std::domain_error("path_loss_los: carrier frequency must be > 0 GHz");
    }
    if (!(slant_range_m > 0.0)) {
        throw std::domain_error("path_loss_los: slant range must be > 0 m");
    }
    return 32.45 + 20.0 * std::log10(carrier_frequency_GHz) +
           20.0 * std::log10(slant_range_m) + sf_los_dB;
}

double clutter_loss(double aircraft_height_m, double cl_max_dB, double h0_m) {
    if (!(aircraft_height_m >= 0.0)) {
        throw std::domain_error("clutter_loss: aircraft height must be >= 0");
    }
    if (!(h0_m > 0.0)) {
        throw std::domain_error("clutter_loss: h0_m must be > 0");
    }
    return cl_max_dB * std::exp(-aircraft_height_m / h0_m);
}

double path_loss_nlos(double carrier_frequency_GHz, double slant_range_m,
                      double sf_nlos_dB, double clutter_dB) {
    return path_loss_los(carrier_frequency_GHz, slant_range_m, sf_nlos_dB) + clutter_dB;
}

double combined_path_loss(double p_los, double pl_los_dB, double pl_nlos_dB) {
    if (!(p_los >= 0.0) || !(p_los <= 1.0)) {
        throw std::domain_error("combined_path_loss: p_los must be in [0, 1]");
    }
    return p_los * pl_los_dB + (1.0 - p_los) * pl_nlos_dB;
}

PathLossBreakdown evaluate_path_loss(const UrbanEnvironment& env,
                                     const PropagationParams& params,
                                     const SatLinkGeometry& link) {
    if (!(link.slant_range_m > 0.0)) {
        throw std::domain_error("evaluate_path_loss: slant range must be > 0 m");
    }
    PathLossBreakdown out;
    out.p_los = los_probability(env, link.aircraft_height_m, link.node_height_m,
                                link.ground_range_m);
    out.clutter_dB = clutter_loss(link.aircraft_height_m, params.cl_max_dB, params.h0_m);
    out.pl_los_dB = path_loss_los(params.carrier_frequency_GHz, link.slant_range_m,
                                  params.sf_los_dB);
    out.pl_nlos_dB = path_loss_nlos(params.carrier_frequency_GHz, link.slant_range_m,
                                    params.sf_nlos_dB, out.clutter_dB);
    out.pl_combined_dB = combined_path_loss(out.p_los, out.pl_los_dB, out.pl_nlos_dB);
    return out;
}

} // namespace aircover
