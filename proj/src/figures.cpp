#include "aircover/figures.hpp"

#include "aircover/csv_writer.hpp"
#include "aircover/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <utility>
#include <vector>

namespace aircover {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kPlotLeft = 65.0;
constexpr double kPlotRight = 600.0;
constexpr double kPlotTop = 45.0;
constexpr double kPlotBottom = 450.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct Curve {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct Threshold {
    double y;
    std::string label;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Curve> curves;
    std::vector<Threshold> thresholds;
    bool fixed_y = false;
    double y_min = 0.0;
    double y_max = 1.0;
};

std::string fmt2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string render_chart(const ChartSpec& chart) {
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = chart.y_min;
    double y_max = chart.y_max;
    bool has_point = false;
    for (const Curve& curve : chart.curves) {
        for (const auto& [x, y] : curve.points) {
            if (!has_point) {
                x_min = x_max = x;
                if (!chart.fixed_y) {
                    y_min = y_max = y;
                }
                has_point = true;
                continue;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            if (!chart.fixed_y) {
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
        }
    }
    if (!chart.fixed_y) {
        for (const Threshold& t : chart.thresholds) {
            if (!has_point) {
                y_min = y_max = t.y;
            } else {
                y_min = std::min(y_min, t.y);
                y_max = std::max(y_max, t.y);
            }
        }
        const double span = y_max - y_min;
        const double pad = span > 0.0 ? span * 0.05 : 1.0;
        y_min -= pad;
        y_max += pad;
    }
    if (x_max == x_min) {
        x_max = x_min + 1.0;
    }

    const auto to_px_x = [&](double x) {
        return kPlotLeft + (x - x_min) / (x_max - x_min) * (kPlotRight - kPlotLeft);
    };
    const auto to_px_y = [&](double y) {
        return kPlotBottom - (y - y_min) / (y_max - y_min) * (kPlotBottom - kPlotTop);
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt2(kWidth) + "\" height=\"" + fmt2(kHeight) + "\" viewBox=\"0 0 " +
           fmt2(kWidth) + " " + fmt2(kHeight) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "  <text x=\"" + fmt2((kPlotLeft + kPlotRight) / 2.0) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           escape_xml(chart.title) + "</text>\n";

    // gridlines and tick labels, 5 divisions per axis
    for (int i = 0; i <= 5; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 5.0;
        const double fy = y_min + (y_max - y_min) * i / 5.0;
        const double px = to_px_x(fx);
        const double py = to_px_y(fy);
        svg += "  <line class=\"grid\" x1=\"" + fmt2(px) + "\" y1=\"" + fmt2(kPlotTop) +
               "\" x2=\"" + fmt2(px) + "\" y2=\"" + fmt2(kPlotBottom) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "  <line class=\"grid\" x1=\"" + fmt2(kPlotLeft) + "\" y1=\"" + fmt2(py) +
               "\" x2=\"" + fmt2(kPlotRight) + "\" y2=\"" + fmt2(py) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "  <text x=\"" + fmt2(px) + "\" y=\"" + fmt2(kPlotBottom + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_sig6(fx) + "</text>\n";
        svg += "  <text x=\"" + fmt2(kPlotLeft - 8.0) + "\" y=\"" + fmt2(py + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_sig6(fy) + "</text>\n";
    }

    // axes
    svg += "  <line class=\"axis\" x1=\"" + fmt2(kPlotLeft) + "\" y1=\"" + fmt2(kPlotBottom) +
           "\" x2=\"" + fmt2(kPlotRight) + "\" y2=\"" + fmt2(kPlotBottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "  <line class=\"axis\" x1=\"" + fmt2(kPlotLeft) + "\" y1=\"" + fmt2(kPlotTop) +
           "\" x2=\"" + fmt2(kPlotLeft) + "\" y2=\"" + fmt2(kPlotBottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "  <text x=\"" + fmt2((kPlotLeft + kPlotRight) / 2.0) + "\" y=\"" +
           fmt2(kHeight - 12.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           escape_xml(chart.x_label) + "</text>\n";
    svg += "  <text x=\"18\" y=\"" + fmt2((kPlotTop + kPlotBottom) / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " +
           fmt2((kPlotTop + kPlotBottom) / 2.0) + ")\">" +
           escape_xml(chart.y_label) + "</text>\n";

    for (const Threshold& t : chart.thresholds) {
        const double py = to_px_y(t.y);
        svg += "  <line class=\"threshold\" x1=\"" + fmt2(kPlotLeft) + "\" y1=\"" + fmt2(py) +
               "\" x2=\"" + fmt2(kPlotRight) + "\" y2=\"" + fmt2(py) +
               "\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
        svg += "  <text x=\"" + fmt2(kPlotLeft + 6.0) + "\" y=\"" + fmt2(py - 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555555\">" +
               escape_xml(t.label) + "</text>\n";
    }

    for (std::size_t c = 0; c < chart.curves.size(); ++c) {
        const Curve& curve = chart.curves[c];
        const char* color = kPalette[c % kPaletteSize];
        std::string points;
        for (const auto& [x, y] : curve.points) {
            points += fmt2(to_px_x(x)) + "," + fmt2(to_px_y(y)) + " ";
        }
        if (!points.empty()) {
            points.pop_back();
        }
        svg += "  <polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
        const double ly = kPlotTop + 10.0 + 18.0 * static_cast<double>(c);
        svg += "  <line x1=\"615\" y1=\"" + fmt2(ly) + "\" x2=\"645\" y2=\"" + fmt2(ly) +
               "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "  <text x=\"650\" y=\"" + fmt2(ly + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + escape_xml(curve.label) +
               "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

ChartSpec build_chart(const SweepSeries& series, FigureKind kind) {
    ChartSpec chart;
    switch (kind) {
    case FigureKind::Los:
        chart.title = "LoS probability vs aircraft height";
        chart.x_label = "aircraft height (m)";
        chart.y_label = "LoS probability";
        chart.fixed_y = true;
        chart.y_min = 0.0;
        chart.y_max = 1.0;
        break;
    case FigureKind::PathLoss:
        chart.title = "Path loss vs aircraft height";
        chart.x_label = "aircraft height (m)";
        chart.y_label = "path loss (dB)";
        break;
    case FigureKind::Gain:
        chart.title = "Vertical antenna attenuation";
        chart.x_label = "pattern angle (deg)";
        chart.y_label = "attenuation (dB)";
        break;
    case FigureKind::Rssi:
        chart.title = "RSSI vs aircraft height";
        chart.x_label = "aircraft height (m)";
        chart.y_label = "RSSI (dBm)";
        break;
    }

    if (kind == FigureKind::Gain) {
        for (const LinkSpec& link : series.links) {
            if (!link.pattern) {
                continue;
            }
            Curve curve;
            curve.label = link.label;
            for (int i = 0; i <= 360; ++i) {
                const double theta = -90.0 + 0.5 * i;
                curve.points.emplace_back(theta, vertical_attenuation(theta, *link.pattern));
            }
            chart.curves.push_back(std::move(curve));
        }
        return chart;
    }

    for (std::size_t l = 0; l < series.links.size(); ++l) {
        Curve curve;
        curve.label = series.links[l].label;
        for (std::size_t h = 0; h < series.heights_m.size(); ++h) {
            const SweepRecord& r = series.at(l, h);
            double y = 0.0;
            switch (kind) {
            case FigureKind::Los: y = r.p_los; break;
            case FigureKind::PathLoss: y = r.pl_combined_dB; break;
            case FigureKind::Rssi: y = r.rssi_dBm; break;
            case FigureKind::Gain: break;
            }
            curve.points.emplace_back(r.height_m, y);
        }
        chart.curves.push_back(std::move(curve));
    }

    if (kind == FigureKind::Rssi) {
        std::vector<double> seen;
        for (const LinkSpec& link : series.links) {
            const double s = link.terminal.sensitivity_dBm;
            if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
                seen.push_back(s);
                chart.thresholds.push_back({s, "sensitivity " + format_sig6(s) + " dBm"});
            }
        }
    }
    return chart;
}

void write_text_file(const std::string& text, const std::string& path) {
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

} // namespace

FigureKind figure_kind_from_name(const std::string& name) {
    if (name == "los") {
        return FigureKind::Los;
    }
    if (name == "pathloss") {
        return FigureKind::PathLoss;
    }
    if (name == "gain") {
        return FigureKind::Gain;
    }
    if (name == "rssi") {
        return FigureKind::Rssi;
    }
    throw ConfigError("unknown figure name '" + name +
                      "' (expected los, pathloss, gain, or rssi)");
}

std::string figure_basename(FigureKind kind) {
    switch (kind) {
    case FigureKind::Los: return "los";
    case FigureKind::PathLoss: return "pathloss";
    case FigureKind::Gain: return "gain";
    case FigureKind::Rssi: return "rssi";
    }
    return "figure";
}

std::string figure_svg(const SweepSeries& series, FigureKind kind) {
    return render_chart(build_chart(series, kind));
}

std::string figure_csv_string(const SweepSeries& series, FigureKind kind) {
    std::string out;
    const ChartSpec chart = build_chart(series, kind);
    switch (kind) {
    case FigureKind::Los: out = "link_label,height_m,p_los\n"; break;
    case FigureKind::PathLoss: out = "link_label,height_m,pl_combined_dB\n"; break;
    case FigureKind::Gain: out = "link_label,theta_deg,attenuation_dB\n"; break;
    case FigureKind::Rssi: out = "link_label,height_m,rssi_dBm\n"; break;
    }
    for (const auto& curve : chart.curves) {
        for (const auto& [x, y] : curve.points) {
            out += curve.label + "," + format_sig6(x) + "," + format_sig6(y) + "\n";
        }
    }
    return out;
}

void emit_figure(const SweepSeries& series, FigureKind kind, const std::string& path) {
    write_text_file(figure_svg(series, kind), path);
}

void emit_figure_csv(const SweepSeries& series, FigureKind kind, const std::string& path) {
    write_text_file(figure_csv_string(series, kind), path);
}

} // namespace aircover
