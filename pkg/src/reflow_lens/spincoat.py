"""Spin-curve calibration ``t = a * omega**b`` and spin-speed design sweeps."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .conservation import ResistPattern, forward_lens_diameter
from .errors import DomainError, InputFormatError, InsufficientData, NonPhysicalFit
from .geometry import (
    DEFAULT_ANGLE_DEG,
    DEFAULT_CONVENTION,
    VolumeConvention,
    _check_positive,
    sag_height,
)

CALIBRATION_HEADER = ("spin_rpm", "thickness_um")
SWEEP_HEADER = ("spin_rpm", "pattern_um", "thickness_um", "lens_diameter_um", "sag_height_um")


@dataclass(frozen=True)
class CalibrationPoint:
    spin_speed: float  # rpm
    thickness: float  # um

    def __post_init__(self):
        _check_positive("spin_speed", self.spin_speed)
        _check_positive("thickness", self.thickness)


@dataclass(frozen=True)
class SpinModel:
    """Power law ``thickness = coefficient * rpm**exponent`` with its log-space fit residual."""

    coefficient: float
    exponent: float
    rms_log_residual: float = 0.0

    def __post_init__(self):
        _check_positive("coefficient", self.coefficient)
        if not self.exponent < 0:
            raise NonPhysicalFit(f"spin exponent must be negative, got {self.exponent}")

    def as_dict(self) -> dict[str, float]:
        return {
            "coefficient": self.coefficient,
            "exponent": self.exponent,
            "rms_log_residual": self.rms_log_residual,
        }


@dataclass(frozen=True)
class SweepRow:
    spin_speed: float
    pattern_diameter: float
    thickness: float
    lens_diameter: float
    sag_height: float

    def as_tuple(self) -> tuple[float, ...]:
        return (self.spin_speed, self.pattern_diameter, self.thickness, self.lens_diameter, self.sag_height)


def fit_spin_model(points: Sequence[CalibrationPoint]) -> SpinModel:
    """Least-squares line through ``(log rpm, log thickness)``."""
    if len(points) < 2:
        raise InsufficientData(f"need at least 2 calibration points, got {len(points)}")
    log_w = np.log([p.spin_speed for p in points])
    log_t = np.log([p.thickness for p in points])
    if np.ptp(log_w) == 0.0:
        raise InsufficientData("calibration points need at least two distinct spin speeds")
    dw = log_w - log_w.mean()
    slope = float(np.dot(dw, log_t - log_t.mean()) / np.dot(dw, dw))
    intercept = float(log_t.mean() - slope * log_w.mean())
    resid = log_t - (intercept + slope * log_w)
    rms = float(np.sqrt(np.mean(resid**2)))
    if slope >= 0:
        raise NonPhysicalFit(f"fitted exponent {slope:.6g} >= 0: thickness does not fall with spin speed")
    return SpinModel(float(np.exp(intercept)), float(slope), rms)


def thickness_at(model: SpinModel, spin_speed: float) -> float:
    w = _check_positive("spin_speed", spin_speed)
    return model.coefficient * w**model.exponent


def speed_for_thickness(model: SpinModel, target_thickness: float) -> float:
    """Spin speed giving ``target_thickness``; diverges as the target goes to zero."""
    t = _check_positive("target_thickness", target_thickness)
    return (t / model.coefficient) ** (1.0 / model.exponent)


def speed_grid(omega_min: float, omega_max: float, steps: int) -> np.ndarray:
    _check_positive("omega_min", omega_min)
    _check_positive("omega_max", omega_max)
    if omega_min > omega_max:
        raise DomainError(f"omega_min {omega_min} exceeds omega_max {omega_max}")
    if steps < 2:
        raise DomainError(f"need at least 2 sweep steps, got {steps}")
    return np.linspace(omega_min, omega_max, int(steps))


def sweep_lens_vs_speed(
    model: SpinModel,
    pattern_diameters: Iterable[float],
    theta_deg: float = DEFAULT_ANGLE_DEG,
    convention: VolumeConvention = DEFAULT_CONVENTION,
    speed_range: tuple[float, float] = (1000.0, 6000.0),
    steps: int = 51,
) -> list[SweepRow]:
    """Lens diameter and sag versus spin speed, one curve per pattern diameter.

    Rows are grouped by pattern diameter (input order), each group running
    up the speed grid.
    """
    grid = speed_grid(speed_range[0], speed_range[1], steps)
    rows = []
    for d in pattern_diameters:
        for w in grid:
            t = thickness_at(model, float(w))
            big_d = forward_lens_diameter(ResistPattern(float(d), t), theta_deg, convention)
            rows.append(SweepRow(float(w), float(d), t, big_d, sag_height(big_d, theta_deg)))
    return rows


def read_calibration_csv(path: str | Path) -> list[CalibrationPoint]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != CALIBRATION_HEADER:
            raise InputFormatError(f"{path}: expected header {','.join(CALIBRATION_HEADER)}, got {header}")
        points = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise InputFormatError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
            try:
                points.append(CalibrationPoint(float(row[0]), float(row[1])))
            except ValueError as exc:
                raise InputFormatError(f"{path}:{lineno}: {exc}") from exc
    return points


def write_calibration_csv(path: str | Path, points: Iterable[CalibrationPoint]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CALIBRATION_HEADER)
        for p in points:
            writer.writerow([repr(p.spin_speed), repr(p.thickness)])


def format_sweep_csv(rows: Iterable[SweepRow]) -> str:
    lines = [",".join(SWEEP_HEADER)]
    for row in rows:
        lines.append(",".join(f"{v:.4f}" for v in row.as_tuple()))
    return "\n".join(lines) + "\n"


def parse_sweep_csv(text: str) -> list[SweepRow]:
    reader = csv.reader(text.splitlines())
    header = next(reader, None)
    if header is None or tuple(header) != SWEEP_HEADER:
        raise InputFormatError(f"expected sweep header {','.join(SWEEP_HEADER)}, got {header}")
    return [SweepRow(*(float(v) for v in row)) for row in reader if row]

