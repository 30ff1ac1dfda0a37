"""Volume balance between the resist column and the reflowed lens.

The melted column keeps its volume, so ``pi d^2 t / 4 = f(theta) pi D^3 / 6``
with ``f`` from :func:`~reflow_lens.geometry.cap_fill_fraction`.  Every
direction of that balance has a closed form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .geometry import (
    DEFAULT_ANGLE_DEG,
    DEFAULT_CONVENTION,
    LensGeometry,
    VolumeConvention,
    _check_positive,
    cap_fill_fraction,
    column_volume,
)


@dataclass(frozen=True)
class ResistPattern:
    """Cylindrical photoresist column before reflow (micrometres)."""

    pattern_diameter: float
    thickness: float

    def __post_init__(self):
        _check_positive("pattern_diameter", self.pattern_diameter)
        _check_positive("thickness", self.thickness)

    @property
    def volume(self) -> float:
        return column_volume(self.pattern_diameter, self.thickness)


@dataclass(frozen=True)
class DesignRow:
    pattern: ResistPattern
    predicted: LensGeometry


def forward_lens_diameter(
    pattern: ResistPattern,
    theta_deg: float = DEFAULT_ANGLE_DEG,
    convention: VolumeConvention = DEFAULT_CONVENTION,
) -> float:
    f = cap_fill_fraction(theta_deg, convention)
    d, t = pattern.pattern_diameter, pattern.thickness
    return (3.0 * d * d * t / (2.0 * f)) ** (1.0 / 3.0)


def required_thickness(
    target_diameter: float,
    pattern_diameter: float,
    theta_deg: float = DEFAULT_ANGLE_DEG,
    convention: VolumeConvention = DEFAULT_CONVENTION,
) -> float:
    """Resist thickness that reflows a ``pattern_diameter`` column into a sphere of ``target_diameter``."""
    big_d = _check_positive("target_diameter", target_diameter)
    d = _check_positive("pattern_diameter", pattern_diameter)
    f = cap_fill_fraction(theta_deg, convention)
    return 2.0 * f * big_d**3 / (3.0 * d * d)


def required_pattern_diameter(
    target_diameter: float,
    thickness: float,
    theta_deg: float = DEFAULT_ANGLE_DEG,
    convention: VolumeConvention = DEFAULT_CONVENTION,
) -> float:
    big_d = _check_positive("target_diameter", target_diameter)
    t = _check_positive("thickness", thickness)
    f = cap_fill_fraction(theta_deg, convention)
    return math.sqrt(2.0 * f * big_d**3 / (3.0 * t))


def design_row(
    pattern: ResistPattern,
    theta_deg: float = DEFAULT_ANGLE_DEG,
    convention: VolumeConvention = DEFAULT_CONVENTION,
) -> DesignRow:
    diameter = forward_lens_diameter(pattern, theta_deg, convention)
    return DesignRow(pattern, LensGeometry.from_diameter(diameter, theta_deg, convention))


def design_table(
    pattern_diameters: Sequence[float],
    thickness: float,
    theta_deg: float = DEFAULT_ANGLE_DEG,
    convention: VolumeConvention = DEFAULT_CONVENTION,
) -> list[DesignRow]:
    """Predicted lens for each pattern diameter at a common resist thickness."""
    if len(pattern_diameters) == 0:
        raise DomainError("pattern_diameters is empty")
    rows = []
    for i, d in enumerate(pattern_diameters):
        try:
            rows.append(design_row(ResistPattern(d, thickness), theta_deg, convention))
        except DomainError as exc:
            raise DomainError(f"pattern_diameters[{i}]: {exc}") from exc
    return rows
