#pragma once

#include "aircover/scenario.hpp"

#include <string>

namespace aircover {

enum class FigureKind { Los, PathLoss, Gain, Rssi };

/// Maps a figure name (los, pathloss, gain, rssi) to its kind; throws
/// ConfigError for anything else.
FigureKind figure_kind_from_name(const std::string& name);

/// File stem used for a figure's .svg/.csv pair.
std::string figure_basename(FigureKind kind);

/// The figure as an SVG 1.1 document. los/pathloss/rssi plot one polyline
/// per link against aircraft height (the los axis is fixed to [0, 1]); gain
/// sweeps the pattern angle over [-90, 90] for every link that carries a
/// pattern. The rssi figure adds one dashed horizontal reference line per
/// distinct sensitivity threshold.
std::string figure_svg(const SweepSeries& series, FigureKind kind);

/// The data behind a figure, as link_label,x,y rows.
std::string figure_csv_string(const SweepSeries& series, FigureKind kind);

/// figure_svg written to a file (IoError on write failure).
void emit_figure(const SweepSeries& series, FigureKind kind, const std::string& path);

/// figure_csv_string written to a file (IoError on write failure).
void emit_figure_csv(const SweepSeries& series, FigureKind kind, const std::string& path);

} // namespace aircover
