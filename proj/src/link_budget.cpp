#include "aircover/link_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace aircover {

namespace {

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string("link budget: ") + what + " must be finite");
    }
}

} // namespace

double received_power(const RadioTerminal& terminal, double antenna_gain_dB,
                      double path_loss_dB) {
    check_finite(terminal.tx_power_dBm, "tx_power_dBm");
    check_finite(terminal.tx_gain_dBi, "tx_gain_dBi");
    check_finite(terminal.rx_gain_dBi, "rx_gain_dBi");
    check_finite(antenna_gain_dB, "antenna_gain_dB");
    check_finite(path_loss_dB, "path_loss_dB");
    return terminal.tx_power_dBm + terminal.tx_gain_dBi + terminal.rx_gain_dBi +
           antenna_gain_dB - path_loss_dB;
}

CoverageVerdict coverage_verdict(double rssi_dBm, double sensitivity_dBm) {
    check_finite(rssi_dBm, "rssi_dBm");
    check_finite(sensitivity_dBm, "sensitivity_dBm");
    CoverageVerdict v;
    v.margin_dB = rssi_dBm - sensitivity_dBm;
    v.covered = rssi_dBm >= sensitivity_dBm;
    return v;
}

LinkBudgetResult link_budget(const RadioTerminal& terminal, double antenna_gain_dB,
                             double path_loss_dB) {
    LinkBudgetResult r;
    r.antenna_gain_dB = antenna_gain_dB;
    r.path_loss_dB = path_loss_dB;
    r.rssi_dBm = received_power(terminal, antenna_gain_dB, path_loss_dB);
    const CoverageVerdict v = coverage_verdict(r.rssi_dBm, terminal.sensitivity_dBm);
    r.margin_dB = v.margin_dB;
    r.covered = v.covered;
    return r;
}

} // namespace aircover
