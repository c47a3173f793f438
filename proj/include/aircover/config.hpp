#pragma once

#include "aircover/scenario.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace aircover {

/// Where sweep results go. Paths may also be supplied (or overridden) on the
/// command line; empty means "not set here".
struct OutputOptions {
    std::string csv_path;
    std::string figures_dir;
};

struct ScenarioConfig {
    SweepSpec spec;
    OutputOptions output;
    bool band_check = true;
};

/// Current (and only) config schema version; configs must declare it.
inline constexpr int kSchemaVersion = 1;

/// Parses and validates a JSON scenario file. Applies the built-in urban
/// defaults for omitted optional fields, rejects unknown keys, and reports
/// every invalid field in one ConfigError. Advisory diagnostics (the NTN
/// band check) go to `diagnostics`.
ScenarioConfig parse_config(const std::string& path, std::ostream& diagnostics);

/// Same, from an in-memory JSON document. `origin` names the source in error
/// messages.
ScenarioConfig parse_config_text(const std::string& json_text, const std::string& origin,
                                 std::ostream& diagnostics);

/// Canonical JSON for a spec: sorted keys, explicit values for every field.
/// parse_config_text(canonical_config_json(spec)) reproduces the spec.
std::string canonical_config_json(const SweepSpec& spec, const OutputOptions& output = {});

/// The built-in evaluation preset: the reference urban environment with
/// three TN links at 0.5/1/2 km and three NTN links at 10/30/90 degrees,
/// swept over 1..300 m.
SweepSpec urban_evaluation_preset();

/// One row of the NTN band-edge reference table.
struct BandEdge {
    std::string band;
    std::string direction;  // "uplink" or "downlink"
    double low_MHz = 0.0;
    double high_MHz = 0.0;
};

/// Loads the band-edge reference table (ships with the tool as a CSV data
/// file). Throws IoError when the file cannot be read.
std::vector<BandEdge> load_band_table(const std::string& csv_path);

/// Default location of the band table.
std::string default_band_table_path();

/// Advisory check: one warning line per NTN link whose carrier frequency
/// falls outside every band in the table. Never fails the config.
std::vector<std::string> out_of_band_warnings(const SweepSpec& spec,
                                              const std::vector<BandEdge>& table);

} // namespace aircover
