#include "aircover/csv_writer.hpp"

#include "aircover/errors.hpp"

#include <cstdio>
#include <fstream>

namespace aircover {

std::string format_sig6(double value) {
    if (value == 0.0) {
        return "0"; // normalizes -0
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string csv_string(const SweepSeries& series) {
    if (series.records.empty()) {
        throw ConfigError("emit_csv: series is empty");
    }
    std::string out = "link_label,height_m,p_los,pl_los_dB,pl_nlos_dB,clutter_dB,"
                      "pl_combined_dB,antenna_gain_dB,rssi_dBm,margin_dB,covered\n";
    for (std::size_t l = 0; l < series.links.size(); ++l) {
        for (std::size_t h = 0; h < series.heights_m.size(); ++h) {
            const SweepRecord& r = series.at(l, h);
            out += series.links[l].label;
            out += ',';
            out += format_sig6(r.height_m);
            out += ',';
            out += format_sig6(r.p_los);
            out += ',';
            out += format_sig6(r.pl_los_dB);
            out += ',';
            out += format_sig6(r.pl_nlos_dB);
            out += ',';
            out += format_sig6(r.clutter_dB);
            out += ',';
            out += format_sig6(r.pl_combined_dB);
            out += ',';
            out += format_sig6(r.antenna_gain_dB);
            out += ',';
            out += format_sig6(r.rssi_dBm);
            out += ',';
            out += format_sig6(r.margin_dB);
            out += ',';
            out += r.covered ? "true" : "false";
            out += '\n';
        }
    }
    return out;
}

void emit_csv(const SweepSeries& series, const std::string& path) {
    const std::string text = csv_string(series);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

} // namespace aircover
