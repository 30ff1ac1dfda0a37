"""Young's equation and wetting classification from the three interface energies."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NoEquilibriumAngle
from .geometry import check_angle

SUPERHYDROPHOBIC_DEG = 150.0


class WettingRegime(enum.Enum):
    SPREADING = "spreading"
    PARTIAL_WETTING = "partial-wetting"
    BEADING = "beading"


class AngleClass(enum.Enum):
    HYDROPHILIC = "hydrophilic"
    HYDROPHOBIC = "hydrophobic"
    SUPERHYDROPHOBIC = "superhydrophobic"


@dataclass(frozen=True)
class SurfaceEnergies:
    """Interface energies in mJ/m^2: solid-air, liquid-solid, air-liquid."""

    s_sa: float
    s_ls: float
    s_al: float

    def __post_init__(self):
        for name in ("s_sa", "s_ls", "s_al"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if not self.s_al > 0:
            raise DomainError(f"liquid surface tension s_al must be positive, got {self.s_al}")

    def young_cosine(self) -> Fraction:
        # exact rational so the sign tests and the cosine agree at the boundaries
        return (Fraction(self.s_sa) - Fraction(self.s_ls)) / Fraction(self.s_al)


def young_contact_angle(e: SurfaceEnergies) -> float:
    """Equilibrium angle in degrees from ``S_sa = S_ls + S_al cos(theta)``."""
    cos_theta = e.young_cosine()
    if abs(cos_theta) >= 1:
        side = "spreads completely" if cos_theta > 0 else "beads completely"
        raise NoEquilibriumAngle(
            f"(S_sa - S_ls)/S_al = {float(cos_theta):.6g} is outside (-1, 1); the drop {side}"
        )
    return math.degrees(math.acos(float(cos_theta)))


def classify_wetting(e: SurfaceEnergies) -> WettingRegime:
    cos_theta = e.young_cosine()
    if cos_theta > 1:
        return WettingRegime.SPREADING
    if cos_theta < -1:
        return WettingRegime.BEADING
    return WettingRegime.PARTIAL_WETTING


def classify_angle(theta_deg: float) -> AngleClass:
    theta_deg = check_angle(theta_deg)
    if theta_deg < 90.0:
        return AngleClass.HYDROPHILIC
    if theta_deg < SUPERHYDROPHOBIC_DEG:
        return AngleClass.HYDROPHOBIC
    return AngleClass.SUPERHYDROPHOBIC
