#pragma once

#include "aircover/antenna.hpp"
#include "aircover/geometry.hpp"
#include "aircover/link_budget.hpp"
#include "aircover/los_model.hpp"
#include "aircover/propagation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aircover {

enum class LinkKind { TN, NTN };

/// One configured link. TN links are fixed by their horizontal ground range
/// and carry a vertical antenna pattern; NTN links are fixed by their
/// elevation angle and see no pattern (gain term held at 0 dB).
struct LinkSpec {
    LinkKind kind = LinkKind::TN;
    std::string label;
    double ground_range_km = 0.0;  // TN only
    double elevation_deg = 0.0;    // NTN only
    double node_height_m = 25.0;
    std::optional<VerticalPattern> pattern;
    PropagationParams propagation;
    RadioTerminal terminal;
};

/// A height-sweep request: the environment, the earth model for satellite
/// geometry, the aircraft heights to evaluate, and the links to evaluate
/// them against.
struct SweepSpec {
    UrbanEnvironment environment;
    EarthModel earth;
    std::vector<double> heights_m;
    std::vector<LinkSpec> links;
};

/// One (link, height) evaluation, carrying every plotted/exported quantity.
struct SweepRecord {
    double height_m = 0.0;
    double p_los = 0.0;
    double pl_los_dB = 0.0;
    double pl_nlos_dB = 0.0;
    double clutter_dB = 0.0;
    double pl_combined_dB = 0.0;
    double antenna_gain_dB = 0.0;
    double rssi_dBm = 0.0;
    double margin_dB = 0.0;
    bool covered = false;
};

/// Sweep result in canonical order: records grouped by link (in spec order),
/// heights ascending within each link. Keeps a copy of the link specs so the
/// series is self-describing for export.
struct SweepSeries {
    std::vector<LinkSpec> links;
    std::vector<double> heights_m;
    std::vector<SweepRecord> records;
    std::vector<bool> covered_any;  // per height, OR over links

    std::size_t link_index(const std::string& label) const;  // throws on unknown label
    const SweepRecord& at(std::size_t link, std::size_t height_idx) const {
        return records[link * heights_m.size() + height_idx];
    }
};

struct HybridAvailability {
    std::vector<bool> covered_any;
    double covered_fraction = 0.0;
};

/// Evenly spaced grid {start, start + step, ...} up to and including stop
/// (within a half-step tolerance for the endpoint).
std::vector<double> height_grid(double start_m, double stop_m, double step_m);

/// Checks every SweepSpec invariant; returns one message per violation.
std::vector<std::string> validate_spec(const SweepSpec& spec);

/// Evaluates every (link, height) pair: geometry, path-loss breakdown,
/// pattern gain (TN only), RSSI, and verdict. Deterministic; throws
/// ConfigError when the spec is invalid, annotates geometry errors with link
/// label and height.
SweepSeries run_sweep(const SweepSpec& spec);

/// Maximal contiguous height intervals with covered = true for one link,
/// reported at grid resolution. With refine_endpoints, boundary heights are
/// linearly interpolated between the neighbouring grid points instead.
std::vector<std::pair<double, double>> coverage_intervals(const SweepSeries& series,
                                                          const std::string& link_label,
                                                          bool refine_endpoints = false);

/// Per-height OR across links plus the fraction of heights covered by at
/// least one link.
HybridAvailability hybrid_availability(const SweepSeries& series);

/// Lowest grid height with covered = true, or nullopt when the link is
/// covered nowhere.
std::optional<double> min_feasible_height(const SweepSeries& series,
                                          const std::string& link_label);

} // namespace aircover
