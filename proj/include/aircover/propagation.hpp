#pragma once

#include "aircover/geometry.hpp"
#include "aircover/los_model.hpp"

namespace aircover {

/// Path-loss inputs: carrier frequency, the fixed LoS/NLoS shadow-fading
/// margins, and the clutter model (maximum loss and decay height).
/// h0_m is tied to the environment as 1.25 * gamma and is filled in by
/// params_for_environment rather than configured on its own.
struct PropagationParams {
    double carrier_frequency_GHz = 3.6;
    double sf_los_dB = 4.0;
    double sf_nlos_dB = 6.0;
    double cl_max_dB = 34.3;
    double h0_m = 18.75;
};

PropagationParams params_for_environment(const UrbanEnvironment& env,
                                         double carrier_frequency_GHz,
                                         double sf_los_dB = 4.0,
                                         double sf_nlos_dB = 6.0,
                                         double cl_max_dB = 34.3);

/// Every intermediate of one path-loss evaluation.
struct PathLossBreakdown {
    double p_los = 0.0;
    double pl_los_dB = 0.0;
    double pl_nlos_dB = 0.0;
    double clutter_dB = 0.0;
    double pl_combined_dB = 0.0;
};

/// Free-space path loss plus the LoS shadow-fading margin:
/// 32.45 + 20 log10(f_GHz) + 20 log10(r_m) + SF.
double path_loss_los(double carrier_frequency_GHz, double slant_range_m, double sf_los_dB);

/// Clutter loss decaying exponentially with aircraft height:
/// cl_max * exp(-h / h0).
double clutter_loss(double aircraft_height_m, double cl_max_dB, double h0_m);

/// NLoS path loss: the LoS form with the NLoS shadow margin plus clutter.
double path_loss_nlos(double carrier_frequency_GHz, double slant_range_m,
                      double sf_nlos_dB, double clutter_dB);

/// Probability-weighted combination of the two branch losses, taken directly
/// on the dB values.
double combined_path_loss(double p_los, double pl_los_dB, double pl_nlos_dB);

/// Full evaluation for one link geometry: LoS probability over the ground
/// range, clutter at the aircraft height, both branch losses on the slant
/// range, and their combination.
PathLossBreakdown evaluate_path_loss(const UrbanEnvironment& env,
                                     const PropagationParams& params,
                                     const SatLinkGeometry& link);

} // namespace aircover
