import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from reflow_lens.conservation import ResistPattern
from reflow_lens.errors import InputFormatError, InsufficientData, NonPhysicalFit
from reflow_lens.geometry import VolumeConvention, column_volume
from reflow_lens.spincoat import (
    CalibrationPoint,
    SpinModel,
    fit_spin_model,
    format_sweep_csv,
    parse_sweep_csv,
    read_calibration_csv,
    speed_for_thickness,
    sweep_lens_vs_speed,
    thickness_at,
    write_calibration_csv,
)

PAPER = VolumeConvention.PAPER_EQ2
MODEL = SpinModel(939.1, -0.5)


def _points(a, b, speeds):
    return [CalibrationPoint(w, a * w**b) for w in speeds]


def test_fit_recovers_exact_power_law():
    m = fit_spin_model(_points(939.1, -0.5, [1000, 2000, 4000]))
    assert m.coefficient == pytest.approx(939.1, rel=1e-3)
    assert m.exponent == pytest.approx(-0.5, abs=1e-6)
    assert m.rms_log_residual < 1e-12


def test_two_point_fit_is_exact():
    m = fit_spin_model([CalibrationPoint(1000, 20), CalibrationPoint(4000, 10)])
    assert m.exponent == pytest.approx(-math.log(2) / math.log(4), abs=1e-12)
    assert m.rms_log_residual == pytest.approx(0.0, abs=1e-12)


def test_flat_data_is_nonphysical():
    with pytest.raises(NonPhysicalFit):
        fit_spin_model([CalibrationPoint(1000, 10), CalibrationPoint(4000, 10)])


def test_too_few_points():
    with pytest.raises(InsufficientData):
        fit_spin_model([CalibrationPoint(1000, 10)])
    with pytest.raises(InsufficientData):
        fit_spin_model([CalibrationPoint(1000, 10), CalibrationPoint(1000, 12)])


def test_duplicate_speeds_are_regressed():
    pts = [CalibrationPoint(1000, 20), CalibrationPoint(1000, 22), CalibrationPoint(4000, 10)]
    assert fit_spin_model(pts).exponent < 0


@given(st.floats(1.0, 1e4), st.floats(-2.0, -0.05))
def test_noiseless_recovery(a, b):
    m = fit_spin_model(_points(a, b, [500, 900, 2000, 3500, 8000]))
    assert m.coefficient == pytest.approx(a, rel=1e-6)
    assert m.exponent == pytest.approx(b, rel=1e-6)


def test_residual_tracks_noise_level(rng):
    speeds = np.linspace(500, 8000, 2000)
    noise = rng.normal(0.0, 0.05, speeds.size)
    pts = [CalibrationPoint(w, 939.1 * w**-0.5 * math.exp(e)) for w, e in zip(speeds, noise)]
    m = fit_spin_model(pts)
    assert m.rms_log_residual == pytest.approx(np.sqrt(np.mean(noise**2)), rel=0.1)


def test_thickness_at_anchor():
    assert thickness_at(MODEL, 2000) == pytest.approx(21.0, abs=0.01)
    w = (1 / MODEL.coefficient) ** (1 / MODEL.exponent)
    assert thickness_at(MODEL, w) == pytest.approx(1.0)
    assert thickness_at(MODEL, 1000) > thickness_at(MODEL, 1001)


def test_speed_for_thickness_anchor():
    assert speed_for_thickness(MODEL, 21.0) == pytest.approx(2000, rel=1e-3)


@given(st.floats(0.01, 500.0))
def test_speed_thickness_round_trip(t):
    assert thickness_at(MODEL, speed_for_thickness(MODEL, t)) == pytest.approx(t, rel=1e-12)


def test_spin_model_rejects_positive_exponent():
    with pytest.raises(NonPhysicalFit):
        SpinModel(10.0, 0.1)


def test_sweep_reproduces_anchor():
    rows = sweep_lens_vs_speed(MODEL, [80.0], 116.0, PAPER, (2000, 2000), 2)
    assert len(rows) == 2
    for r in rows:
        assert r.lens_diameter == pytest.approx(101.6, abs=0.1)


def test_sweep_monotone_and_ordered():
    rows = sweep_lens_vs_speed(MODEL, [60.0, 70.0, 80.0], 116.0, PAPER, (1000, 6000), 26)
    by_d = {}
    for r in rows:
        by_d.setdefault(r.pattern_diameter, []).append(r)
    assert list(by_d) == [60.0, 70.0, 80.0]
    for curve in by_d.values():
        assert np.all(np.diff([r.lens_diameter for r in curve]) < 0)
        assert np.all(np.diff([r.sag_height for r in curve]) < 0)
    for small, big in [(60.0, 70.0), (70.0, 80.0)]:
        for a, b in zip(by_d[small], by_d[big]):
            assert b.lens_diameter > a.lens_diameter
            assert b.sag_height > a.sag_height


def test_sweep_rows_conserve_mass():
    from reflow_lens.geometry import lens_volume

    for r in sweep_lens_vs_speed(MODEL, [60.0, 80.0], 116.0, PAPER, (1000, 6000), 5):
        v_col = ResistPattern(r.pattern_diameter, r.thickness).volume
        assert lens_volume(r.lens_diameter, 116.0, PAPER) == pytest.approx(v_col, rel=1e-9)
        assert v_col == column_volume(r.pattern_diameter, r.thickness)


def test_calibration_csv_round_trip(tmp_path):
    pts = _points(939.1, -0.5, [1000, 2500])
    path = tmp_path / "c.csv"
    write_calibration_csv(path, pts)
    assert read_calibration_csv(path) == pts


def test_calibration_csv_accepts_crlf(tmp_path):
    path = tmp_path / "c.csv"
    path.write_bytes(b"spin_rpm,thickness_um\r\n1000,20\r\n4000,10\r\n")
    assert read_calibration_csv(path) == [CalibrationPoint(1000, 20), CalibrationPoint(4000, 10)]


def test_calibration_csv_bad_header(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text("rpm,t\n1000,20\n")
    with pytest.raises(InputFormatError):
        read_calibration_csv(path)


def test_sweep_csv_round_trip():
    rows = sweep_lens_vs_speed(MODEL, [70.0], 116.0, PAPER, (1500, 3000), 4)
    text = format_sweep_csv(rows)
    assert text.endswith("\n") and "\r" not in text
    back = parse_sweep_csv(text)
    assert len(back) == len(rows)
    for a, b in zip(rows, back):
        assert a.as_tuple() == pytest.approx(b.as_tuple(), abs=5e-5)


@pytest.mark.parametrize("convention", list(VolumeConvention))
def test_realistic_sweep_stays_inside_achievable_range(convention):
    # t from 5 to 25 um; every predicted lens stays within 30-110 um
    speeds = (speed_for_thickness(MODEL, 25.0), speed_for_thickness(MODEL, 5.0))
    rows = sweep_lens_vs_speed(MODEL, [60.0, 70.0, 80.0], 116.0, convention, speeds, 41)
    assert all(30.0 <= r.lens_diameter <= 110.0 for r in rows)
