"""Smoke tests for the python bindings."""

import aircover


def test_geometry_values():
    earth = aircover.EarthModel()
    assert abs(aircover.slant_range(0.0, 300000.0, 10.0, earth) - 1237000.0) < 2000.0
    assert aircover.slant_range(0.0, 300000.0, 90.0, earth) == 300000.0
    assert aircover.ground_range(0.0, 300000.0, 90.0, earth) == 0.0
    assert abs(aircover.tn_slant_range(50.0, 25.0, 0.5) - 500.6246) < 1e-3


def test_los_probability_bounds():
    env = aircover.UrbanEnvironment(0.3, 500.0, 15.0)
    p = aircover.los_probability(env, 40.0, 25.0, 500.0)
    assert 0.45 <= p <= 0.55
    assert aircover.los_probability(env, 40.0, 25.0, 0.0) == 1.0


def test_preset_sweep_and_coverage():
    spec = aircover.urban_evaluation_preset()
    assert len(spec.links) == 6
    series = aircover.run_sweep(spec)
    assert len(series.records) == 6 * 300

    assert aircover.min_feasible_height(series, "ntn-30deg") == 3.0
    assert aircover.min_feasible_height(series, "ntn-10deg") is None
    intervals = aircover.coverage_intervals(series, "ntn-90deg")
    assert intervals == [(1.0, 300.0)]

    idx = series.link_index("ntn-90deg")
    record = series.at(idx, 99)  # height 100 m
    assert abs(record.rssi_dBm - (-91.01)) < 0.1
    assert record.covered


def test_hybrid_availability():
    spec = aircover.urban_evaluation_preset()
    spec.links = [spec.links[0], spec.links[5]]
    hybrid = aircover.hybrid_availability(aircover.run_sweep(spec))
    assert hybrid.covered_fraction == 1.0


def test_config_roundtrip_and_csv():
    spec = aircover.urban_evaluation_preset()
    text = aircover.canonical_config_json(spec)
    parsed, diagnostics = aircover.parse_config_text(text)
    assert diagnostics == ""
    assert aircover.canonical_config_json(parsed) == text

    series = aircover.run_sweep(spec)
    csv_text = aircover.csv_string(series)
    assert csv_text.splitlines()[0].startswith("link_label,height_m,p_los")
    assert len(csv_text.splitlines()) == 1801
    assert csv_text == aircover.csv_string(aircover.run_sweep(spec))


def test_figure_svg():
    series = aircover.run_sweep(aircover.urban_evaluation_preset())
    svg = aircover.figure_svg(series, "rssi")
    assert svg.count("<polyline") == 6
    assert svg.count('class="threshold"') == 2
