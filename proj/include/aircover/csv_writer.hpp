#pragma once

#include "aircover/scenario.hpp"

#include <string>

namespace aircover {

/// Fixed 6-significant-digit rendering used for every numeric CSV field.
std::string format_sig6(double value);

/// The sweep table as CSV text: a header row, then one row per (link, height)
/// in canonical order. LF line endings, '.' decimal separator, covered as
/// true/false. Byte-identical for identical series.
std::string csv_string(const SweepSeries& series);

/// csv_string written to a file. Throws IoError when the path is not
/// writable; ConfigError when the series is empty.
void emit_csv(const SweepSeries& series, const std::string& path);

} // namespace aircover
