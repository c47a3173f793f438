#include "aircover/cli.hpp"

#include "aircover/config.hpp"
#include "aircover/csv_writer.hpp"
#include "aircover/errors.hpp"
#include "aircover/figures.hpp"
#include "aircover/scenario.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>

namespace aircover {

namespace {

void ensure_directory(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory '" + dir + "': " + ec.message());
    }
}

void write_all_figures(const SweepSeries& series, const std::string& dir, bool with_csv) {
    ensure_directory(dir);
    for (FigureKind kind : {FigureKind::Los, FigureKind::PathLoss, FigureKind::Gain,
                            FigureKind::Rssi}) {
        const std::string stem = (std::filesystem::path(dir) / figure_basename(kind)).string();
        emit_figure(series, kind, stem + ".svg");
        if (with_csv) {
            emit_figure_csv(series, kind, stem + ".csv");
        }
    }
}

struct PointArgs {
    std::string link_kind;
    std::optional<double> distance_km;
    std::optional<double> elevation_deg;
    double height_m = 0.0;
    std::optional<double> node_height_m;
    std::optional<double> carrier_frequency_GHz;
    std::optional<double> tx_power_dBm;
    std::optional<double> tx_gain_dBi;
    std::optional<double> rx_gain_dBi;
    std::optional<double> sensitivity_dBm;
    std::optional<double> sf_los_dB;
    std::optional<double> sf_nlos_dB;
    std::optional<double> cl_max_dB;
    std::optional<double> alpha;
    std::optional<double> beta_per_km2;
    std::optional<double> gamma_m;
    std::optional<double> true_radius_m;
    std::optional<double> k_factor;
    std::optional<double> etilt_deg;
    std::optional<double> hpbw_deg;
    std::optional<double> sla_v_dB;
};

SweepSpec spec_for_point(const PointArgs& a) {
    SweepSpec spec = urban_evaluation_preset();
    spec.links.clear();
    spec.heights_m = {a.height_m};
    if (a.alpha) {
        spec.environment.alpha = *a.alpha;
    }
    if (a.beta_per_km2) {
        spec.environment.beta_per_km2 = *a.beta_per_km2;
    }
    if (a.gamma_m) {
        spec.environment.gamma_m = *a.gamma_m;
    }
    if (a.true_radius_m) {
        spec.earth.true_radius_m = *a.true_radius_m;
    }
    if (a.k_factor) {
        spec.earth.k_factor = *a.k_factor;
    }

    LinkSpec link;
    if (a.link_kind == "tn") {
        link.kind = LinkKind::TN;
        link.node_height_m = 25.0;
        link.pattern = VerticalPattern{};
        link.terminal = RadioTerminal{23.0, 0.0, 8.0, -100.0};
        if (!a.distance_km) {
            throw ConfigError("point: --distance-km is required with --link tn");
        }
        if (a.elevation_deg) {
            throw ConfigError("point: --elevation-deg is not allowed with --link tn");
        }
        link.ground_range_km = *a.distance_km;
        link.label = "tn";
        if (a.etilt_deg) {
            link.pattern->etilt_deg = *a.etilt_deg;
        }
        if (a.hpbw_deg) {
            link.pattern->hpbw_deg = *a.hpbw_deg;
        }
        if (a.sla_v_dB) {
            link.pattern->sla_v_dB = *a.sla_v_dB;
        }
    } else {
        link.kind = LinkKind::NTN;
        link.node_height_m = 300000.0;
        link.terminal = RadioTerminal{23.0, 0.0, 38.0, -102.4};
        if (!a.elevation_deg) {
            throw ConfigError("point: --elevation-deg is required with --link ntn");
        }
        if (a.distance_km) {
            throw ConfigError("point: --distance-km is not allowed with --link ntn");
        }
        if (a.etilt_deg || a.hpbw_deg || a.sla_v_dB) {
            throw ConfigError("point: pattern overrides are not allowed with --link ntn");
        }
        link.elevation_deg = *a.elevation_deg;
        link.label = "ntn";
    }

    double freq = link.kind == LinkKind::TN ? 3.6 : 2.0;
    double sf_los = 4.0;
    double sf_nlos = 6.0;
    double cl_max = 34.3;
    if (a.carrier_frequency_GHz) {
        freq = *a.carrier_frequency_GHz;
    }
    if (a.sf_los_dB) {
        sf_los = *a.sf_los_dB;
    }
    if (a.sf_nlos_dB) {
        sf_nlos = *a.sf_nlos_dB;
    }
    if (a.cl_max_dB) {
        cl_max = *a.cl_max_dB;
    }
    link.propagation = params_for_environment(spec.environment, freq, sf_los, sf_nlos, cl_max);

    if (a.node_height_m) {
        link.node_height_m = *a.node_height_m;
    }
    if (a.tx_power_dBm) {
        link.terminal.tx_power_dBm = *a.tx_power_dBm;
    }
    if (a.tx_gain_dBi) {
        link.terminal.tx_gain_dBi = *a.tx_gain_dBi;
    }
    if (a.rx_gain_dBi) {
        link.terminal.rx_gain_dBi = *a.rx_gain_dBi;
    }
    if (a.sensitivity_dBm) {
        link.terminal.sensitivity_dBm = *a.sensitivity_dBm;
    }
    spec.links.push_back(link);
    return spec;
}

void add_optional(CLI::App* cmd, const std::string& flag, std::optional<double>& target,
                  const std::string& help) {
    cmd->add_option_function<double>(
        flag, [&target](const double& v) { target = v; }, help);
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"TN/NTN link-budget and coverage calculator for low-altitude aircraft"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a height sweep from a JSON scenario");
    std::string config_path;
    std::string out_csv;
    std::string figures_dir;
    sweep_cmd->add_option("--config", config_path, "Scenario JSON file")->required();
    sweep_cmd->add_option("--out", out_csv, "Output CSV path");
    sweep_cmd->add_option("--figures", figures_dir, "Directory for figure SVGs");

    // point
    auto* point_cmd = app.add_subcommand("point", "Evaluate a single link at one height");
    PointArgs pt;
    point_cmd->add_option("--link", pt.link_kind, "Link kind: tn or ntn")
        ->required()
        ->check(CLI::IsMember({"tn", "ntn"}));
    add_optional(point_cmd, "--distance-km", pt.distance_km, "TN ground range in km");
    add_optional(point_cmd, "--elevation-deg", pt.elevation_deg, "NTN elevation in degrees");
    point_cmd->add_option("--height-m", pt.height_m, "Aircraft height in m")->required();
    add_optional(point_cmd, "--node-height-m", pt.node_height_m, "Node height in m");
    add_optional(point_cmd, "--carrier-frequency-GHz", pt.carrier_frequency_GHz,
                 "Carrier frequency in GHz");
    add_optional(point_cmd, "--tx-power-dBm", pt.tx_power_dBm, "Transmit power in dBm");
    add_optional(point_cmd, "--tx-gain-dBi", pt.tx_gain_dBi, "Transmit antenna gain in dBi");
    add_optional(point_cmd, "--rx-gain-dBi", pt.rx_gain_dBi, "Receive antenna gain in dBi");
    add_optional(point_cmd, "--sensitivity-dBm", pt.sensitivity_dBm,
                 "Receiver sensitivity in dBm");
    add_optional(point_cmd, "--sf-los-dB", pt.sf_los_dB, "LoS shadow-fading margin in dB");
    add_optional(point_cmd, "--sf-nlos-dB", pt.sf_nlos_dB, "NLoS shadow-fading margin in dB");
    add_optional(point_cmd, "--cl-max-dB", pt.cl_max_dB, "Maximum clutter loss in dB");
    add_optional(point_cmd, "--alpha", pt.alpha, "Built-up area ratio");
    add_optional(point_cmd, "--beta-per-km2", pt.beta_per_km2, "Building density per km^2");
    add_optional(point_cmd, "--gamma-m", pt.gamma_m, "Building-height Rayleigh scale in m");
    add_optional(point_cmd, "--true-radius-m", pt.true_radius_m, "True Earth radius in m");
    add_optional(point_cmd, "--k-factor", pt.k_factor, "Effective-Earth radius multiplier");
    add_optional(point_cmd, "--etilt-deg", pt.etilt_deg, "TN pattern downtilt in degrees");
    add_optional(point_cmd, "--hpbw-deg", pt.hpbw_deg, "TN pattern half-power beamwidth");
    add_optional(point_cmd, "--sla-v-dB", pt.sla_v_dB, "TN pattern attenuation floor in dB");

    // paper-figs
    auto* figs_cmd = app.add_subcommand(
        "paper-figs", "Run the built-in urban evaluation preset and write all four "
                      "reference figures with their CSV data");
    std::string figs_out;
    figs_cmd->add_option("--out", figs_out, "Output directory")->required();

    std::vector<const char*> argv;
    argv.push_back("aircover");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp& e) {
            out << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }

        if (sweep_cmd->parsed()) {
            const ScenarioConfig config = parse_config(config_path, err);
            const std::string csv_path =
                !out_csv.empty() ? out_csv : config.output.csv_path;
            if (csv_path.empty()) {
                throw ConfigError("sweep: --out is required (or set output.csv_path "
                                  "in the config)");
            }
            const std::string fig_dir =
                !figures_dir.empty() ? figures_dir : config.output.figures_dir;
            const SweepSeries series = run_sweep(config.spec);
            emit_csv(series, csv_path);
            if (!fig_dir.empty()) {
                write_all_figures(series, fig_dir, /*with_csv=*/false);
            }
            return 0;
        }

        if (point_cmd->parsed()) {
            const SweepSpec spec = spec_for_point(pt);
            const SweepSeries series = run_sweep(spec);
            out << csv_string(series);
            return 0;
        }

        if (figs_cmd->parsed()) {
            const SweepSeries series = run_sweep(urban_evaluation_preset());
            write_all_figures(series, figs_out, /*with_csv=*/true);
            return 0;
        }

        err << "error: no subcommand given\n";
        return 1;
    } catch (const ConfigError& e) {
        for (const std::string& issue : e.issues()) {
            err << "error: " << issue << "\n";
        }
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return cli_main(args, std::cout, std::cerr);
}

} // namespace aircover
