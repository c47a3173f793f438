#include "aircover/config.hpp"

#include "aircover/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace aircover {

using nlohmann::json;

namespace {

std::string short_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed,
                std::vector<std::string>& issues) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            issues.push_back(path + ": unknown key '" + item.key() + "'");
        }
    }
}

std::optional<double> get_number(const json& obj, const std::string& path, const char* key,
                                 std::vector<std::string>& issues) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return std::nullopt;
    }
    if (!it->is_number()) {
        issues.push_back(path + "." + key + ": expected a number");
        return std::nullopt;
    }
    return it->get<double>();
}

std::optional<std::string> get_string(const json& obj, const std::string& path,
                                      const char* key, std::vector<std::string>& issues) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return std::nullopt;
    }
    if (!it->is_string()) {
        issues.push_back(path + "." + key + ": expected a string");
        return std::nullopt;
    }
    return it->get<std::string>();
}

void apply(std::optional<double> v, double& target) {
    if (v) {
        target = *v;
    }
}

VerticalPattern parse_pattern(const json& obj, const std::string& path,
                              std::vector<std::string>& issues) {
    VerticalPattern p;
    if (!obj.is_object()) {
        issues.push_back(path + ": expected an object");
        return p;
    }
    check_keys(obj, path, {"etilt_deg", "hpbw_deg", "sla_v_dB"}, issues);
    apply(get_number(obj, path, "etilt_deg", issues), p.etilt_deg);
    apply(get_number(obj, path, "hpbw_deg", issues), p.hpbw_deg);
    apply(get_number(obj, path, "sla_v_dB", issues), p.sla_v_dB);
    return p;
}

LinkSpec default_tn_link(const UrbanEnvironment& env) {
    LinkSpec link;
    link.kind = LinkKind::TN;
    link.node_height_m = 25.0;
    link.pattern = VerticalPattern{};
    link.propagation = params_for_environment(env, 3.6);
    link.terminal = RadioTerminal{23.0, 0.0, 8.0, -100.0};
    return link;
}

LinkSpec default_ntn_link(const UrbanEnvironment& env) {
    LinkSpec link;
    link.kind = LinkKind::NTN;
    link.node_height_m = 300000.0;
    link.propagation = params_for_environment(env, 2.0);
    link.terminal = RadioTerminal{23.0, 0.0, 38.0, -102.4};
    return link;
}

LinkSpec parse_link(const json& obj, std::size_t idx, const UrbanEnvironment& env,
                    std::vector<std::string>& issues) {
    const std::string path = "links[" + std::to_string(idx) + "]";
    if (!obj.is_object()) {
        issues.push_back(path + ": expected an object");
        return default_tn_link(env);
    }
    check_keys(obj, path,
               {"kind", "label", "ground_range_km", "elevation_deg", "node_height_m",
                "carrier_frequency_GHz", "tx_power_dBm", "tx_gain_dBi", "rx_gain_dBi",
                "sensitivity_dBm", "sf_los_dB", "sf_nlos_dB", "cl_max_dB", "pattern"},
               issues);

    const auto kind = get_string(obj, path, "kind", issues);
    if (!kind || (*kind != "tn" && *kind != "ntn")) {
        issues.push_back(path + ".kind: must be \"tn\" or \"ntn\"");
        return default_tn_link(env);
    }

    LinkSpec link = (*kind == "tn") ? default_tn_link(env) : default_ntn_link(env);

    const auto range = get_number(obj, path, "ground_range_km", issues);
    const auto elevation = get_number(obj, path, "elevation_deg", issues);
    if (link.kind == LinkKind::TN) {
        if (!range) {
            issues.push_back(path + ".ground_range_km: required for a TN link");
        } else {
            link.ground_range_km = *range;
        }
        if (elevation) {
            issues.push_back(path + ".elevation_deg: not allowed on a TN link");
        }
        if (obj.contains("pattern")) {
            link.pattern = parse_pattern(obj.at("pattern"), path + ".pattern", issues);
        }
    } else {
        if (!elevation) {
            issues.push_back(path + ".elevation_deg: required for an NTN link");
        } else {
            link.elevation_deg = *elevation;
        }
        if (range) {
            issues.push_back(path + ".ground_range_km: not allowed on an NTN link");
        }
        if (obj.contains("pattern")) {
            issues.push_back(path + ".pattern: not allowed on an NTN link");
        }
    }

    apply(get_number(obj, path, "node_height_m", issues), link.node_height_m);
    apply(get_number(obj, path, "tx_power_dBm", issues), link.terminal.tx_power_dBm);
    apply(get_number(obj, path, "tx_gain_dBi", issues), link.terminal.tx_gain_dBi);
    apply(get_number(obj, path, "rx_gain_dBi", issues), link.terminal.rx_gain_dBi);
    apply(get_number(obj, path, "sensitivity_dBm", issues), link.terminal.sensitivity_dBm);

    double freq = link.propagation.carrier_frequency_GHz;
    double sf_los = link.propagation.sf_los_dB;
    double sf_nlos = link.propagation.sf_nlos_dB;
    double cl_max = link.propagation.cl_max_dB;
    apply(get_number(obj, path, "carrier_frequency_GHz", issues), freq);
    apply(get_number(obj, path, "sf_los_dB", issues), sf_los);
    apply(get_number(obj, path, "sf_nlos_dB", issues), sf_nlos);
    apply(get_number(obj, path, "cl_max_dB", issues), cl_max);
    link.propagation = params_for_environment(env, freq, sf_los, sf_nlos, cl_max);

    if (const auto label = get_string(obj, path, "label", issues)) {
        link.label = *label;
    } else if (link.kind == LinkKind::TN) {
        link.label = "tn-" + short_number(link.ground_range_km) + "km";
    } else {
        link.label = "ntn-" + short_number(link.elevation_deg) + "deg";
    }
    return link;
}

std::vector<double> parse_heights(const json& value, std::vector<std::string>& issues) {
    if (value.is_array()) {
        std::vector<double> heights;
        heights.reserve(value.size());
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (!value[i].is_number()) {
                issues.push_back("heights_m[" + std::to_string(i) + "]: expected a number");
                return {};
            }
            heights.push_back(value[i].get<double>());
        }
        return heights;
    }
    if (value.is_object()) {
        check_keys(value, "heights_m", {"start_m", "stop_m", "step_m"}, issues);
        double start = 1.0;
        double stop = 300.0;
        double step = 1.0;
        apply(get_number(value, "heights_m", "start_m", issues), start);
        apply(get_number(value, "heights_m", "stop_m", issues), stop);
        apply(get_number(value, "heights_m", "step_m", issues), step);
        if (!(start > 0.0) || !(step > 0.0) || !(stop >= start)) {
            issues.push_back("heights_m: requires 0 < start_m <= stop_m and step_m > 0");
            return {};
        }
        return height_grid(start, stop, step);
    }
    issues.push_back("heights_m: expected an array of heights or {start_m, stop_m, step_m}");
    return {};
}

} // namespace

ScenarioConfig parse_config_text(const std::string& json_text, const std::string& origin,
                                 std::ostream& diagnostics) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }

    std::vector<std::string> issues;
    if (!doc.is_object()) {
        throw ConfigError(origin + ": top level must be a JSON object");
    }
    check_keys(doc, origin,
               {"schema_version", "environment", "earth", "heights_m", "links", "output",
                "band_check"},
               issues);

    if (!doc.contains("schema_version")) {
        issues.push_back("schema_version: required");
    } else if (!doc["schema_version"].is_number_integer() ||
               doc["schema_version"].get<int>() != kSchemaVersion) {
        issues.push_back("schema_version: must be the integer " +
                         std::to_string(kSchemaVersion));
    }

    ScenarioConfig config;
    SweepSpec& spec = config.spec;

    if (doc.contains("environment")) {
        const json& env = doc["environment"];
        if (!env.is_object()) {
            issues.push_back("environment: expected an object");
        } else {
            check_keys(env, "environment", {"alpha", "beta_per_km2", "gamma_m"}, issues);
            apply(get_number(env, "environment", "alpha", issues), spec.environment.alpha);
            apply(get_number(env, "environment", "beta_per_km2", issues),
                  spec.environment.beta_per_km2);
            apply(get_number(env, "environment", "gamma_m", issues), spec.environment.gamma_m);
        }
    }

    if (doc.contains("earth")) {
        const json& earth = doc["earth"];
        if (!earth.is_object()) {
            issues.push_back("earth: expected an object");
        } else {
            check_keys(earth, "earth", {"true_radius_m", "k_factor"}, issues);
            apply(get_number(earth, "earth", "true_radius_m", issues), spec.earth.true_radius_m);
            apply(get_number(earth, "earth", "k_factor", issues), spec.earth.k_factor);
        }
    }

    if (doc.contains("heights_m")) {
        spec.heights_m = parse_heights(doc["heights_m"], issues);
    } else {
        spec.heights_m = height_grid(1.0, 300.0, 1.0);
    }

    if (!doc.contains("links") || !doc["links"].is_array() || doc["links"].empty()) {
        issues.push_back("links: required, non-empty array");
    } else {
        for (std::size_t i = 0; i < doc["links"].size(); ++i) {
            spec.links.push_back(parse_link(doc["links"][i], i, spec.environment, issues));
        }
    }

    if (doc.contains("output")) {
        const json& out = doc["output"];
        if (!out.is_object()) {
            issues.push_back("output: expected an object");
        } else {
            check_keys(out, "output", {"csv_path", "figures_dir"}, issues);
            if (const auto v = get_string(out, "output", "csv_path", issues)) {
                config.output.csv_path = *v;
            }
            if (const auto v = get_string(out, "output", "figures_dir", issues)) {
                config.output.figures_dir = *v;
            }
        }
    }

    if (doc.contains("band_check")) {
        if (!doc["band_check"].is_boolean()) {
            issues.push_back("band_check: expected a boolean");
        } else {
            config.band_check = doc["band_check"].get<bool>();
        }
    }

    for (const std::string& issue : validate_spec(spec)) {
        issues.push_back(issue);
    }
    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }

    if (config.band_check) {
        try {
            const auto table = load_band_table(default_band_table_path());
            for (const std::string& warning : out_of_band_warnings(spec, table)) {
                diagnostics << "warning: " << warning << "\n";
            }
        } catch (const IoError& e) {
            diagnostics << "note: NTN band check skipped (" << e.what() << ")\n";
        }
    }
    return config;
}

ScenarioConfig parse_config(const std::string& path, std::ostream& diagnostics) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str(), path, diagnostics);
}

std::string canonical_config_json(const SweepSpec& spec, const OutputOptions& output) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["environment"] = {{"alpha", spec.environment.alpha},
                          {"beta_per_km2", spec.environment.beta_per_km2},
                          {"gamma_m", spec.environment.gamma_m}};
    doc["earth"] = {{"true_radius_m", spec.earth.true_radius_m},
                    {"k_factor", spec.earth.k_factor}};
    doc["heights_m"] = spec.heights_m;
    json links = json::array();
    for (const LinkSpec& link : spec.links) {
        json j;
        j["kind"] = link.kind == LinkKind::TN ? "tn" : "ntn";
        j["label"] = link.label;
        if (link.kind == LinkKind::TN) {
            j["ground_range_km"] = link.ground_range_km;
        } else {
            j["elevation_deg"] = link.elevation_deg;
        }
        j["node_height_m"] = link.node_height_m;
        j["carrier_frequency_GHz"] = link.propagation.carrier_frequency_GHz;
        j["sf_los_dB"] = link.propagation.sf_los_dB;
        j["sf_nlos_dB"] = link.propagation.sf_nlos_dB;
        j["cl_max_dB"] = link.propagation.cl_max_dB;
        j["tx_power_dBm"] = link.terminal.tx_power_dBm;
        j["tx_gain_dBi"] = link.terminal.tx_gain_dBi;
        j["rx_gain_dBi"] = link.terminal.rx_gain_dBi;
        j["sensitivity_dBm"] = link.terminal.sensitivity_dBm;
        if (link.pattern) {
            j["pattern"] = {{"etilt_deg", link.pattern->etilt_deg},
                            {"hpbw_deg", link.pattern->hpbw_deg},
                            {"sla_v_dB", link.pattern->sla_v_dB}};
        }
        links.push_back(j);
    }
    doc["links"] = links;
    if (!output.csv_path.empty() || !output.figures_dir.empty()) {
        json out;
        if (!output.csv_path.empty()) {
            out["csv_path"] = output.csv_path;
        }
        if (!output.figures_dir.empty()) {
            out["figures_dir"] = output.figures_dir;
        }
        doc["output"] = out;
    }
    return doc.dump(2) + "\n";
}

SweepSpec urban_evaluation_preset() {
    SweepSpec spec;
    spec.environment = UrbanEnvironment{0.3, 500.0, 15.0};
    spec.earth = EarthModel{};
    spec.heights_m = height_grid(1.0, 300.0, 1.0);
    for (double range_km : {0.5, 1.0, 2.0}) {
        LinkSpec link = default_tn_link(spec.environment);
        link.ground_range_km = range_km;
        link.label = "tn-" + short_number(range_km) + "km";
        spec.links.push_back(link);
    }
    for (double elevation : {10.0, 30.0, 90.0}) {
        LinkSpec link = default_ntn_link(spec.environment);
        link.elevation_deg = elevation;
        link.label = "ntn-" + short_number(elevation) + "deg";
        spec.links.push_back(link);
    }
    return spec;
}

std::string default_band_table_path() {
#ifdef AIRCOVER_DATA_DIR
    return std::string(AIRCOVER_DATA_DIR) + "/ntn_bands.csv";
#else
    return "data/ntn_bands.csv";
#endif
}

std::vector<BandEdge> load_band_table(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) {
        throw IoError("cannot read band table '" + csv_path + "'");
    }
    std::vector<BandEdge> table;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        BandEdge edge;
        std::string low;
        std::string high;
        if (!std::getline(row, edge.band, ',') || !std::getline(row, edge.direction, ',') ||
            !std::getline(row, low, ',') || !std::getline(row, high)) {
            throw IoError("malformed band table row: '" + line + "'");
        }
        edge.low_MHz = std::stod(low);
        edge.high_MHz = std::stod(high);
        table.push_back(edge);
    }
    return table;
}

std::vector<std::string> out_of_band_warnings(const SweepSpec& spec,
                                              const std::vector<BandEdge>& table) {
    std::vector<std::string> warnings;
    for (const LinkSpec& link : spec.links) {
        if (link.kind != LinkKind::NTN) {
            continue;
        }
        const double f_MHz = link.propagation.carrier_frequency_GHz * 1000.0;
        bool inside = false;
        for (const BandEdge& edge : table) {
            if (f_MHz >= edge.low_MHz && f_MHz <= edge.high_MHz) {
                inside = true;
                break;
            }
        }
        if (!inside) {
            warnings.push_back("link '" + link.label + "': carrier frequency " +
                               short_number(link.propagation.carrier_frequency_GHz) +
                               " GHz lies outside every listed NTN band");
        }
    }
    return warnings;
}

} // namespace aircover
