#include "aircover/scenario.hpp"

#include "aircover/errors.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace aircover {

std::size_t SweepSeries::link_index(const std::string& label) const {
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (links[i].label == label) {
            return i;
        }
    }
    throw ConfigError("unknown link label '" + label + "'");
}

std::vector<double> height_grid(double start_m, double stop_m, double step_m) {
    if (!(start_m > 0.0) || !(step_m > 0.0) || !(stop_m >= start_m)) {
        throw ConfigError("height grid: requires 0 < start_m <= stop_m and step_m > 0");
    }
    std::vector<double> grid;
    const double limit = stop_m + step_m * 1e-9;
    for (int i = 0;; ++i) {
        const double h = start_m + i * step_m;
        if (h > limit) {
            break;
        }
        grid.push_back(h);
    }
    return grid;
}

namespace {

void check_number(std::vector<std::string>& issues, bool ok, const std::string& what) {
    if (!ok) {
        issues.push_back(what);
    }
}

std::string link_field(const LinkSpec& link, std::size_t idx, const char* field) {
    std::string name = link.label.empty() ? "links[" + std::to_string(idx) + "]" : link.label;
    return name + ": " + field;
}

} // namespace

std::vector<std::string> validate_spec(const SweepSpec& spec) {
    std::vector<std::string> issues;

    check_number(issues, spec.environment.alpha > 0.0 && spec.environment.alpha <= 1.0,
                 "environment.alpha must be in (0, 1]");
    check_number(issues, spec.environment.beta_per_km2 > 0.0,
                 "environment.beta_per_km2 must be > 0");
    check_number(issues, spec.environment.gamma_m > 0.0, "environment.gamma_m must be > 0");
    check_number(issues, spec.earth.true_radius_m > 0.0, "earth.true_radius_m must be > 0");
    check_number(issues, spec.earth.k_factor >= 1.0, "earth.k_factor must be >= 1");

    if (spec.heights_m.empty()) {
        issues.push_back("heights_m must contain at least one height");
    }
    for (std::size_t i = 0; i < spec.heights_m.size(); ++i) {
        if (!(spec.heights_m[i] > 0.0)) {
            issues.push_back("heights_m[" + std::to_string(i) + "] must be > 0");
        }
        if (i > 0 && !(spec.heights_m[i] > spec.heights_m[i - 1])) {
            issues.push_back("heights_m must be strictly increasing at index " +
                             std::to_string(i));
        }
    }

    if (spec.links.empty()) {
        issues.push_back("links must contain at least one link");
    }
    std::set<std::string> labels;
    const double max_height =
        spec.heights_m.empty() ? 0.0 : spec.heights_m.back();
    for (std::size_t i = 0; i < spec.links.size(); ++i) {
        const LinkSpec& link = spec.links[i];
        if (link.label.empty()) {
            issues.push_back("links[" + std::to_string(i) + "].label must be non-empty");
        } else if (!labels.insert(link.label).second) {
            issues.push_back("links[" + std::to_string(i) + "].label duplicates '" +
                             link.label + "'");
        }
        if (link.kind == LinkKind::TN) {
            check_number(issues, link.ground_range_km > 0.0,
                         link_field(link, i, "ground_range_km must be > 0"));
            check_number(issues, link.elevation_deg == 0.0,
                         link_field(link, i, "elevation_deg must not be set on a TN link"));
            if (!link.pattern) {
                issues.push_back(link_field(link, i, "pattern is required on a TN link"));
            } else {
                check_number(issues, link.pattern->hpbw_deg > 0.0,
                             link_field(link, i, "pattern.hpbw_deg must be > 0"));
                check_number(issues, link.pattern->sla_v_dB >= 0.0,
                             link_field(link, i, "pattern.sla_v_dB must be >= 0"));
            }
            check_number(issues, link.node_height_m >= 0.0,
                         link_field(link, i, "node_height_m must be >= 0"));
        } else {
            check_number(issues, link.elevation_deg > 0.0 && link.elevation_deg <= 90.0,
                         link_field(link, i, "elevation_deg must be in (0, 90]"));
            check_number(issues, link.ground_range_km == 0.0,
                         link_field(link, i, "ground_range_km must not be set on an NTN link"));
            if (link.pattern) {
                issues.push_back(link_field(link, i, "pattern must not be set on an NTN link"));
            }
            check_number(issues, link.node_height_m > max_height,
                         link_field(link, i, "node_height_m must exceed every sweep height"));
        }
        check_number(issues, link.propagation.carrier_frequency_GHz > 0.0,
                     link_field(link, i, "carrier_frequency_GHz must be > 0"));
        check_number(issues, link.propagation.sf_los_dB >= 0.0,
                     link_field(link, i, "sf_los_dB must be >= 0"));
        check_number(issues, link.propagation.sf_nlos_dB >= 0.0,
                     link_field(link, i, "sf_nlos_dB must be >= 0"));
        check_number(issues, link.propagation.cl_max_dB >= 0.0,
                     link_field(link, i, "cl_max_dB must be >= 0"));
        check_number(issues, link.propagation.h0_m > 0.0,
                     link_field(link, i, "h0_m must be > 0"));
        check_number(issues, std::isfinite(link.terminal.tx_power_dBm),
                     link_field(link, i, "tx_power_dBm must be finite"));
        check_number(issues, std::isfinite(link.terminal.tx_gain_dBi),
                     link_field(link, i, "tx_gain_dBi must be finite"));
        check_number(issues, std::isfinite(link.terminal.rx_gain_dBi),
                     link_field(link, i, "rx_gain_dBi must be finite"));
        check_number(issues, std::isfinite(link.terminal.sensitivity_dBm),
                     link_field(link, i, "sensitivity_dBm must be finite"));
    }
    return issues;
}

namespace {

SweepRecord evaluate_link_at(const SweepSpec& spec, const LinkSpec& link, double height_m) {
    SatLinkGeometry geometry;
    double antenna_gain_dB = 0.0;
    if (link.kind == LinkKind::TN) {
        geometry = tn_link_geometry(height_m, link.node_height_m, link.ground_range_km);
        if (link.pattern) {
            const double theta = pattern_angle_for_aircraft(
                height_m, link.node_height_m, geometry.ground_range_m, spec.earth);
            antenna_gain_dB = vertical_attenuation(theta, *link.pattern);
        }
    } else {
        geometry = sat_link_geometry(height_m, link.node_height_m, link.elevation_deg,
                                     spec.earth);
    }
    const PathLossBreakdown pl = evaluate_path_loss(spec.environment, link.propagation,
                                                    geometry);
    const LinkBudgetResult budget = link_budget(link.terminal, antenna_gain_dB,
                                                pl.pl_combined_dB);
    SweepRecord rec;
    rec.height_m = height_m;
    rec.p_los = pl.p_los;
    rec.pl_los_dB = pl.pl_los_dB;
    rec.pl_nlos_dB = pl.pl_nlos_dB;
    rec.clutter_dB = pl.clutter_dB;
    rec.pl_combined_dB = pl.pl_combined_dB;
    rec.antenna_gain_dB = antenna_gain_dB;
    rec.rssi_dBm = budget.rssi_dBm;
    rec.margin_dB = budget.margin_dB;
    rec.covered = budget.covered;
    return rec;
}

} // namespace

SweepSeries run_sweep(const SweepSpec& spec) {
    std::vector<std::string> issues = validate_spec(spec);
    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }
    SweepSeries series;
    series.links = spec.links;
    series.heights_m = spec.heights_m;
    series.records.reserve(spec.links.size() * spec.heights_m.size());
    for (const LinkSpec& link : spec.links) {
        for (double h : spec.heights_m) {
            try {
                series.records.push_back(evaluate_link_at(spec, link, h));
            } catch (const std::domain_error& e) {
                throw std::domain_error("link '" + link.label + "' at height " +
                                        std::to_string(h) + " m: " + e.what());
            }
        }
    }
    series.covered_any.assign(spec.heights_m.size(), false);
    for (std::size_t l = 0; l < spec.links.size(); ++l) {
        for (std::size_t h = 0; h < spec.heights_m.size(); ++h) {
            if (series.at(l, h).covered) {
                series.covered_any[h] = true;
            }
        }
    }
    return series;
}

namespace {

// Height where the margin crosses zero between two adjacent grid records.
double crossing_height(const SweepRecord& a, const SweepRecord& b) {
    const double dm = b.margin_dB - a.margin_dB;
    if (dm == 0.0) {
        return a.height_m;
    }
    const double t = -a.margin_dB / dm;
    return a.height_m + t * (b.height_m - a.height_m);
}

} // namespace

std::vector<std::pair<double, double>> coverage_intervals(const SweepSeries& series,
                                                          const std::string& link_label,
                                                          bool refine_endpoints) {
    const std::size_t link = series.link_index(link_label);
    const std::size_t n = series.heights_m.size();
    std::vector<std::pair<double, double>> intervals;
    std::size_t i = 0;
    while (i < n) {
        if (!series.at(link, i).covered) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && series.at(link, j + 1).covered) {
            ++j;
        }
        double lo = series.at(link, i).height_m;
        double hi = series.at(link, j).height_m;
        if (refine_endpoints) {
            if (i > 0) {
                lo = crossing_height(series.at(link, i - 1), series.at(link, i));
            }
            if (j + 1 < n) {
                hi = crossing_height(series.at(link, j), series.at(link, j + 1));
            }
        }
        intervals.emplace_back(lo, hi);
        i = j + 1;
    }
    return intervals;
}

HybridAvailability hybrid_availability(const SweepSeries& series) {
    if (series.heights_m.empty() || series.links.empty()) {
        throw ConfigError("hybrid_availability: series is empty");
    }
    HybridAvailability out;
    out.covered_any = series.covered_any;
    std::size_t covered = 0;
    for (bool c : out.covered_any) {
        covered += c ? 1 : 0;
    }
    out.covered_fraction = static_cast<double>(covered) /
                           static_cast<double>(out.covered_any.size());
    return out;
}

std::optional<double> min_feasible_height(const SweepSeries& series,
                                          const std::string& link_label) {
    const std::size_t link = series.link_index(link_label);
    for (std::size_t h = 0; h < series.heights_m.size(); ++h) {
        if (series.at(link, h).covered) {
            return series.at(link, h).height_m;
        }
    }
    return std::nullopt;
}

} // namespace aircover
