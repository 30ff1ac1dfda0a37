"""Spherical-cap geometry of a reflowed ball lens.

Lengths are in micrometres, volumes in cubic micrometres and angles in
degrees at every public boundary.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


class VolumeConvention(enum.Enum):
    """Which part of the cut sphere counts as the lens.

    ``PAPER_EQ2`` keeps the sphere minus a cap of polar angle ``theta``, so at
    116 degrees it is the small (19 %) piece.  ``SESSILE_DROP`` is the usual
    sessile-drop cap of height ``R(1 - cos theta)``.  The two are
    complementary and ``PAPER_EQ2(theta) == SESSILE_DROP(180 - theta)``.
    """

    PAPER_EQ2 = "paper-eq2"
    SESSILE_DROP = "sessile-drop"


DEFAULT_CONVENTION = VolumeConvention.PAPER_EQ2
DEFAULT_ANGLE_DEG = 116.0


def check_angle(theta_deg: float) -> float:
    theta_deg = float(theta_deg)
    if not (0.0 < theta_deg < 180.0):
        raise DomainError(f"contact angle must lie in (0, 180) degrees, got {theta_deg!r}")
    return theta_deg


def _check_positive(name: str, value: float) -> float:
    value = float(value)
    if not (value > 0.0 and math.isfinite(value)):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")
    return value


def _cosd(theta_deg: float) -> float:
    # exact at 90 so both volume conventions give exactly one half there
    return 0.0 if theta_deg == 90.0 else math.cos(math.radians(theta_deg))


def cap_fill_fraction(theta_deg: float, convention: VolumeConvention = DEFAULT_CONVENTION) -> float:
    """Lens volume as a fraction of the full sphere ``pi D^3 / 6``."""
    c = _cosd(check_angle(theta_deg))
    sessile = 0.25 * (2.0 + c) * (1.0 - c) ** 2
    if convention is VolumeConvention.SESSILE_DROP:
        return sessile
    if convention is VolumeConvention.PAPER_EQ2:
        return 1.0 - sessile
    raise DomainError(f"unknown volume convention {convention!r}")


def sag_height(sphere_diameter: float, theta_deg: float) -> float:
    r = 0.5 * _check_positive("sphere_diameter", sphere_diameter)
    return r * (1.0 - _cosd(check_angle(theta_deg)))


def contact_angle_from_profile(radius: float, sag: float) -> float:
    """Contact angle in degrees of a cap with sphere radius ``radius`` and height ``sag``.

    Uses ``90 + atan((2h - 2R) / sqrt(8Rh - 4h^2))``, which requires ``0 < h < 2R``.
    """
    radius = _check_positive("radius", radius)
    sag = float(sag)
    disc = 8.0 * radius * sag - 4.0 * sag * sag
    if not (0.0 < sag < 2.0 * radius) or disc <= 0.0:
        raise DomainError(f"sag height must lie in (0, 2R) = (0, {2 * radius}), got {sag!r}")
    return 90.0 + math.degrees(math.atan((2.0 * sag - 2.0 * radius) / math.sqrt(disc)))


def contact_radius(radius: float, theta_deg: float) -> float:
    radius = _check_positive("radius", radius)
    return radius * math.sin(math.radians(check_angle(theta_deg)))


def lens_volume(
    sphere_diameter: float,
    theta_deg: float,
    convention: VolumeConvention = DEFAULT_CONVENTION,
) -> float:
    d = _check_positive("sphere_diameter", sphere_diameter)
    return cap_fill_fraction(theta_deg, convention) * math.pi / 6.0 * d**3


def column_volume(pattern_diameter: float, thickness: float) -> float:
    """Volume of the cylindrical resist column before reflow."""
    d = _check_positive("pattern_diameter", pattern_diameter)
    t = _check_positive("thickness", thickness)
    return math.pi * d * d * t / 4.0


def oracle_volume(sphere_diameter: float, theta_deg: float, panels: int = 100_000) -> float:
    """Sessile-drop cap volume by composite Simpson integration of disc slices.

    Independent of the closed form; slices are integrated from the base
    plane ``z = 0`` up to the apex ``z = h`` with the sphere centre at
    ``z = h - R``.
    """
    r = 0.5 * _check_positive("sphere_diameter", sphere_diameter)
    theta = math.radians(check_angle(theta_deg))
    if panels < 2:
        raise DomainError("need at least 2 Simpson panels")
    panels += panels % 2
    h = r * (1.0 - math.cos(theta))
    z = np.linspace(0.0, h, panels + 1)
    area = np.pi * (r * r - (z - (h - r)) ** 2)
    weights = np.ones(panels + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return float(h / panels / 3.0 * np.dot(weights, area))


@dataclass(frozen=True)
class LensGeometry:
    """Equilibrium ball lens resting on the substrate."""

    sphere_diameter: float
    sag_height: float
    contact_angle: float
    contact_radius: float
    volume: float

    def __post_init__(self):
        if not (0.0 < self.sag_height < self.sphere_diameter):
            raise DomainError(
                f"sag height {self.sag_height} must lie in (0, {self.sphere_diameter})"
            )
        check_angle(self.contact_angle)
        if not self.volume > 0.0:
            raise DomainError(f"volume must be positive, got {self.volume}")
        r = 0.5 * self.sphere_diameter
        theta = math.radians(self.contact_angle)
        if not math.isclose(self.sag_height, r * (1.0 - _cosd(self.contact_angle)), rel_tol=1e-9):
            raise DomainError("sag height is inconsistent with diameter and contact angle")
        if not math.isclose(self.contact_radius, r * math.sin(theta), rel_tol=1e-9):
            raise DomainError("contact radius is inconsistent with diameter and contact angle")

    @classmethod
    def from_diameter(
        cls,
        sphere_diameter: float,
        theta_deg: float,
        convention: VolumeConvention = DEFAULT_CONVENTION,
    ) -> "LensGeometry":
        return cls(
            sphere_diameter=float(sphere_diameter),
            sag_height=sag_height(sphere_diameter, theta_deg),
            contact_angle=float(theta_deg),
            contact_radius=contact_radius(0.5 * sphere_diameter, theta_deg),
            volume=lens_volume(sphere_diameter, theta_deg, convention),
        )

    @classmethod
    def from_diameter_and_sag(
        cls,
        sphere_diameter: float,
        sag: float,
        convention: VolumeConvention = DEFAULT_CONVENTION,
    ) -> "LensGeometry":
        """Lens whose contact angle is implied by its diameter and sag height."""
        r = 0.5 * _check_positive("sphere_diameter", sphere_diameter)
        theta = contact_angle_from_profile(r, sag)
        return cls(
            sphere_diameter=float(sphere_diameter),
            sag_height=float(sag),
            contact_angle=theta,
            contact_radius=contact_radius(r, theta),
            volume=lens_volume(sphere_diameter, theta, convention),
        )

    @property
    def radius(self) -> float:
        return 0.5 * self.sphere_diameter

    def as_dict(self) -> dict[str, float]:
        return {
            "sphere_diameter_um": self.sphere_diameter,
            "sag_height_um": self.sag_height,
            "contact_angle_deg": self.contact_angle,
            "contact_radius_um": self.contact_radius,
            "volume_um3": self.volume,
        }
