#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aircover/antenna.hpp"
#include "aircover/config.hpp"
#include "aircover/csv_writer.hpp"
#include "aircover/errors.hpp"
#include "aircover/figures.hpp"
#include "aircover/geometry.hpp"
#include "aircover/link_budget.hpp"
#include "aircover/los_model.hpp"
#include "aircover/propagation.hpp"
#include "aircover/scenario.hpp"

#include <sstream>

namespace py = pybind11;
using namespace aircover;

PYBIND11_MODULE(_core, m) {
    m.doc() = "TN/NTN link-budget and coverage model for low-altitude aircraft";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    // geometry
    py::class_<EarthModel>(m, "EarthModel")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("true_radius_m"), py::arg("k_factor"))
        .def_readwrite("true_radius_m", &EarthModel::true_radius_m)
        .def_readwrite("k_factor", &EarthModel::k_factor)
        .def("effective_radius_m", &EarthModel::effective_radius_m);

    py::class_<SatLinkGeometry>(m, "SatLinkGeometry")
        .def(py::init<>())
        .def_readwrite("aircraft_height_m", &SatLinkGeometry::aircraft_height_m)
        .def_readwrite("node_height_m", &SatLinkGeometry::node_height_m)
        .def_readwrite("elevation_deg", &SatLinkGeometry::elevation_deg)
        .def_readwrite("slant_range_m", &SatLinkGeometry::slant_range_m)
        .def_readwrite("ground_range_m", &SatLinkGeometry::ground_range_m);

    m.def("slant_range", &slant_range, py::arg("aircraft_height_m"),
          py::arg("node_height_m"), py::arg("elevation_deg"),
          py::arg("earth") = EarthModel{});
    m.def("ground_range", &ground_range, py::arg("aircraft_height_m"),
          py::arg("node_height_m"), py::arg("elevation_deg"),
          py::arg("earth") = EarthModel{});
    m.def("sat_link_geometry", &sat_link_geometry, py::arg("aircraft_height_m"),
          py::arg("node_height_m"), py::arg("elevation_deg"),
          py::arg("earth") = EarthModel{});
    m.def("tn_slant_range", &tn_slant_range, py::arg("aircraft_height_m"),
          py::arg("node_height_m"), py::arg("ground_range_km"));
    m.def("tn_link_geometry", &tn_link_geometry, py::arg("aircraft_height_m"),
          py::arg("node_height_m"), py::arg("ground_range_km"));
    m.def("elevation_seen_from_node", &elevation_seen_from_node,
          py::arg("aircraft_height_m"), py::arg("node_height_m"),
          py::arg("ground_range_m"), py::arg("earth") = EarthModel{});
    m.def("elevation_from_slant_range", &elevation_from_slant_range,
          py::arg("aircraft_height_m"), py::arg("node_height_m"),
          py::arg("slant_range_m"), py::arg("earth") = EarthModel{});

    // los model
    py::class_<UrbanEnvironment>(m, "UrbanEnvironment")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("alpha"),
             py::arg("beta_per_km2"), py::arg("gamma_m"))
        .def_readwrite("alpha", &UrbanEnvironment::alpha)
        .def_readwrite("beta_per_km2", &UrbanEnvironment::beta_per_km2)
        .def_readwrite("gamma_m", &UrbanEnvironment::gamma_m);

    py::class_<RayProfile>(m, "RayProfile")
        .def_readonly("building_count", &RayProfile::building_count)
        .def_readonly("spacing_m", &RayProfile::spacing_m)
        .def_readonly("building_distances_m", &RayProfile::building_distances_m)
        .def_readonly("ray_heights_m", &RayProfile::ray_heights_m);

    py::enum_<LosMode>(m, "LosMode")
        .value("Fast", LosMode::Fast)
        .value("Exact", LosMode::Exact);

    m.def("buildings_per_km", &buildings_per_km, py::arg("env"));
    m.def("building_count", &building_count, py::arg("ground_range_km"),
          py::arg("b1_per_km"));
    m.def("ray_profile", &ray_profile, py::arg("env"), py::arg("h_tx_m"),
          py::arg("h_rx_m"), py::arg("ground_range_m"));
    m.def("clearance_probability", &clearance_probability, py::arg("ray_height_m"),
          py::arg("gamma_m"));
    m.def("los_probability", &los_probability, py::arg("env"), py::arg("h_tx_m"),
          py::arg("h_rx_m"), py::arg("ground_range_m"),
          py::arg("mode") = LosMode::Fast);
    m.def("prefix_los_probabilities", &prefix_los_probabilities, py::arg("env"),
          py::arg("h_tx_m"), py::arg("h_rx_m"), py::arg("ground_range_m"));

    // propagation
    py::class_<PropagationParams>(m, "PropagationParams")
        .def(py::init<>())
        .def_readwrite("carrier_frequency_GHz", &PropagationParams::carrier_frequency_GHz)
        .def_readwrite("sf_los_dB", &PropagationParams::sf_los_dB)
        .def_readwrite("sf_nlos_dB", &PropagationParams::sf_nlos_dB)
        .def_readwrite("cl_max_dB", &PropagationParams::cl_max_dB)
        .def_readwrite("h0_m", &PropagationParams::h0_m);

    py::class_<PathLossBreakdown>(m, "PathLossBreakdown")
        .def_readonly("p_los", &PathLossBreakdown::p_los)
        .def_readonly("pl_los_dB", &PathLossBreakdown::pl_los_dB)
        .def_readonly("pl_nlos_dB", &PathLossBreakdown::pl_nlos_dB)
        .def_readonly("clutter_dB", &PathLossBreakdown::clutter_dB)
        .def_readonly("pl_combined_dB", &PathLossBreakdown::pl_combined_dB);

    m.def("params_for_environment", &params_for_environment, py::arg("env"),
          py::arg("carrier_frequency_GHz"), py::arg("sf_los_dB") = 4.0,
          py::arg("sf_nlos_dB") = 6.0, py::arg("cl_max_dB") = 34.3);
    m.def("path_loss_los", &path_loss_los, py::arg("carrier_frequency_GHz"),
          py::arg("slant_range_m"), py::arg("sf_los_dB"));
    m.def("clutter_loss", &clutter_loss, py::arg("aircraft_height_m"),
          py::arg("cl_max_dB"), py::arg("h0_m"));
    m.def("path_loss_nlos", &path_loss_nlos, py::arg("carrier_frequency_GHz"),
          py::arg("slant_range_m"), py::arg("sf_nlos_dB"), py::arg("clutter_dB"));
    m.def("combined_path_loss", &combined_path_loss, py::arg("p_los"),
          py::arg("pl_los_dB"), py::arg("pl_nlos_dB"));
    m.def("evaluate_path_loss", &evaluate_path_loss, py::arg("env"), py::arg("params"),
          py::arg("link"));

    // antenna
    py::class_<VerticalPattern>(m, "VerticalPattern")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("etilt_deg"),
             py::arg("hpbw_deg"), py::arg("sla_v_dB"))
        .def_readwrite("etilt_deg", &VerticalPattern::etilt_deg)
        .def_readwrite("hpbw_deg", &VerticalPattern::hpbw_deg)
        .def_readwrite("sla_v_dB", &VerticalPattern::sla_v_dB);

    m.def("vertical_attenuation", &vertical_attenuation, py::arg("theta_deg"),
          py::arg("pattern"));
    m.def("pattern_angle_for_aircraft", &pattern_angle_for_aircraft,
          py::arg("aircraft_height_m"), py::arg("node_height_m"),
          py::arg("ground_range_m"), py::arg("earth") = EarthModel{});

    // link budget
    py::class_<RadioTerminal>(m, "RadioTerminal")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("tx_power_dBm"),
             py::arg("tx_gain_dBi"), py::arg("rx_gain_dBi"), py::arg("sensitivity_dBm"))
        .def_readwrite("tx_power_dBm", &RadioTerminal::tx_power_dBm)
        .def_readwrite("tx_gain_dBi", &RadioTerminal::tx_gain_dBi)
        .def_readwrite("rx_gain_dBi", &RadioTerminal::rx_gain_dBi)
        .def_readwrite("sensitivity_dBm", &RadioTerminal::sensitivity_dBm);

    py::class_<CoverageVerdict>(m, "CoverageVerdict")
        .def_readonly("covered", &CoverageVerdict::covered)
        .def_readonly("margin_dB", &CoverageVerdict::margin_dB);

    py::class_<LinkBudgetResult>(m, "LinkBudgetResult")
        .def_readonly("rssi_dBm", &LinkBudgetResult::rssi_dBm)
        .def_readonly("antenna_gain_dB", &LinkBudgetResult::antenna_gain_dB)
        .def_readonly("path_loss_dB", &LinkBudgetResult::path_loss_dB)
        .def_readonly("margin_dB", &LinkBudgetResult::margin_dB)
        .def_readonly("covered", &LinkBudgetResult::covered);

    m.def("received_power", &received_power, py::arg("terminal"),
          py::arg("antenna_gain_dB"), py::arg("path_loss_dB"));
    m.def("coverage_verdict", &coverage_verdict, py::arg("rssi_dBm"),
          py::arg("sensitivity_dBm"));
    m.def("link_budget", &link_budget, py::arg("terminal"), py::arg("antenna_gain_dB"),
          py::arg("path_loss_dB"));

    // scenario
    py::enum_<LinkKind>(m, "LinkKind").value("TN", LinkKind::TN).value("NTN", LinkKind::NTN);

    py::class_<LinkSpec>(m, "LinkSpec")
        .def(py::init<>())
        .def_readwrite("kind", &LinkSpec::kind)
        .def_readwrite("label", &LinkSpec::label)
        .def_readwrite("ground_range_km", &LinkSpec::ground_range_km)
        .def_readwrite("elevation_deg", &LinkSpec::elevation_deg)
        .def_readwrite("node_height_m", &LinkSpec::node_height_m)
        .def_readwrite("pattern", &LinkSpec::pattern)
        .def_readwrite("propagation", &LinkSpec::propagation)
        .def_readwrite("terminal", &LinkSpec::terminal);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("environment", &SweepSpec::environment)
        .def_readwrite("earth", &SweepSpec::earth)
        .def_readwrite("heights_m", &SweepSpec::heights_m)
        .def_readwrite("links", &SweepSpec::links);

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("height_m", &SweepRecord::height_m)
        .def_readonly("p_los", &SweepRecord::p_los)
        .def_readonly("pl_los_dB", &SweepRecord::pl_los_dB)
        .def_readonly("pl_nlos_dB", &SweepRecord::pl_nlos_dB)
        .def_readonly("clutter_dB", &SweepRecord::clutter_dB)
        .def_readonly("pl_combined_dB", &SweepRecord::pl_combined_dB)
        .def_readonly("antenna_gain_dB", &SweepRecord::antenna_gain_dB)
        .def_readonly("rssi_dBm", &SweepRecord::rssi_dBm)
        .def_readonly("margin_dB", &SweepRecord::margin_dB)
        .def_readonly("covered", &SweepRecord::covered);

    py::class_<SweepSeries>(m, "SweepSeries")
        .def_readonly("links", &SweepSeries::links)
        .def_readonly("heights_m", &SweepSeries::heights_m)
        .def_readonly("records", &SweepSeries::records)
        .def_readonly("covered_any", &SweepSeries::covered_any)
        .def("link_index", &SweepSeries::link_index, py::arg("label"))
        .def("at", &SweepSeries::at, py::arg("link"), py::arg("height_idx"),
             py::return_value_policy::reference_internal);

    py::class_<HybridAvailability>(m, "HybridAvailability")
        .def_readonly("covered_any", &HybridAvailability::covered_any)
        .def_readonly("covered_fraction", &HybridAvailability::covered_fraction);

    m.def("height_grid", &height_grid, py::arg("start_m"), py::arg("stop_m"),
          py::arg("step_m"));
    m.def("validate_spec", &validate_spec, py::arg("spec"));
    m.def("run_sweep", &run_sweep, py::arg("spec"));
    m.def("coverage_intervals", &coverage_intervals, py::arg("series"),
          py::arg("link_label"), py::arg("refine_endpoints") = false);
    m.def("hybrid_availability", &hybrid_availability, py::arg("series"));
    m.def("min_feasible_height", &min_feasible_height, py::arg("series"),
          py::arg("link_label"));

    // configuration and export
    m.def("urban_evaluation_preset", &urban_evaluation_preset);
    m.def(
        "parse_config_text",
        [](const std::string& text, const std::string& origin) {
            std::ostringstream diag;
            const ScenarioConfig config = parse_config_text(text, origin, diag);
            return py::make_tuple(config.spec, diag.str());
        },
        py::arg("json_text"), py::arg("origin") = std::string("<string>"),
        "Parse a scenario JSON document; returns (spec, diagnostics_text)");
    m.def("canonical_config_json",
          [](const SweepSpec& spec) { return canonical_config_json(spec); },
          py::arg("spec"));
    m.def("csv_string", &csv_string, py::arg("series"));
    m.def(
        "figure_svg",
        [](const SweepSeries& series, const std::string& name) {
            return figure_svg(series, figure_kind_from_name(name));
        },
        py::arg("series"), py::arg("which"));
}
