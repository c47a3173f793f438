#pragma once

namespace aircover {

/// Transmit/receive chain of one link: UE transmit power, both antenna gains,
/// and the receiver sensitivity the RSSI is judged against.
struct RadioTerminal {
    double tx_power_dBm = 23.0;
    double tx_gain_dBi = 0.0;
    double rx_gain_dBi = 0.0;
    double sensitivity_dBm = -100.0;
};

struct CoverageVerdict {
    bool covered = false;
    double margin_dB = 0.0;
};

/// One link-budget evaluation.
struct LinkBudgetResult {
    double rssi_dBm = 0.0;
    double antenna_gain_dB = 0.0;
    double path_loss_dB = 0.0;
    double margin_dB = 0.0;
    bool covered = false;
};

/// Friis in dB form: P_tx + G_tx + G_rx + A_V - P_L.
double received_power(const RadioTerminal& terminal, double antenna_gain_dB,
                      double path_loss_dB);

/// Covered iff rssi >= sensitivity (boundary counts as covered);
/// margin = rssi - sensitivity.
CoverageVerdict coverage_verdict(double rssi_dBm, double sensitivity_dBm);

/// received_power + coverage_verdict bundled with their inputs.
LinkBudgetResult link_budget(const RadioTerminal& terminal, double antenna_gain_dB,
                             double path_loss_dB);

} // namespace aircover
