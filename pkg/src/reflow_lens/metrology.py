"""Profile analysis: Ra roughness, circle fits to stylus scans, theory comparison."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DegenerateFit, DomainError, InputFormatError, InsufficientData, ProfileInconsistent
from .geometry import (
    DEFAULT_CONVENTION,
    LensGeometry,
    VolumeConvention,
)

PROFILE_HEADER = ("x_um", "z_um")


@dataclass(frozen=True, eq=False)
class SurfaceProfile:
    """Line scan with strictly increasing ``x``; both axes in micrometres."""

    x: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        z = np.asarray(self.z, dtype=float)
        if x.ndim != 1 or x.shape != z.shape:
            raise DomainError(f"x and z must be 1-D and equal length, got {x.shape} and {z.shape}")
        if x.size < 3:
            raise InsufficientData(f"a profile needs at least 3 samples, got {x.size}")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(z))):
            raise DomainError("profile contains non-finite samples")
        if np.any(np.diff(x) <= 0):
            raise DomainError("profile x must be strictly increasing")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)

    def __len__(self):
        return self.x.size


@dataclass(frozen=True)
class MeasuredLens:
    diameter: float
    height: float

    def __post_init__(self):
        if not (0 < self.height < self.diameter):
            raise DomainError(f"need 0 < height < diameter, got {self.height}, {self.diameter}")


@dataclass(frozen=True)
class ComparisonRow:
    experimental: MeasuredLens
    theoretical: LensGeometry
    diameter_error_pct: float
    height_error_pct: float

    def as_dict(self) -> dict[str, float]:
        return {
            "measured_diameter_um": self.experimental.diameter,
            "theory_diameter_um": self.theoretical.sphere_diameter,
            "diameter_error_pct": self.diameter_error_pct,
            "measured_height_um": self.experimental.height,
            "theory_height_um": self.theoretical.sag_height,
            "height_error_pct": self.height_error_pct,
        }


def roughness_ra(profile: SurfaceProfile) -> float:
    """Arithmetic mean deviation from the least-squares line, in nanometres."""
    if len(profile) < 3:
        raise InsufficientData("Ra needs at least 3 samples")
    slope, intercept = np.polyfit(profile.x, profile.z, 1)
    resid = profile.z - (slope * profile.x + intercept)
    return float(np.mean(np.abs(resid))) * 1e3


def fit_circle(x: np.ndarray, z: np.ndarray) -> tuple[float, float, float]:
    """Algebraic (Kasa) circle fit, returns ``(x_center, z_center, radius)``.

    Minimises ``sum (x^2 + z^2 + D x + E z + F)^2``.  Biased toward smaller
    radii on short noisy arcs.
    """
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    # centre the data so the normal equations stay well conditioned
    x0, z0 = x.mean(), z.mean()
    u, v = x - x0, z - z0
    a = np.column_stack([u, v, np.ones_like(u)])
    scale = max(np.ptp(u), np.ptp(v))
    if scale == 0.0 or np.linalg.matrix_rank(a, tol=1e-10 * scale) < 3:
        raise DegenerateFit("samples do not constrain a circle")
    b = -(u * u + v * v)
    (d, e, f), *_ = np.linalg.lstsq(a, b, rcond=None)
    uc, vc = -0.5 * d, -0.5 * e
    r2 = uc * uc + vc * vc - f
    # collinear points drive the centre off to infinity
    if not np.isfinite(r2) or r2 <= 0 or np.sqrt(r2) > 1e6 * scale:
        raise DegenerateFit("samples are collinear or nearly so")
    return float(uc + x0), float(vc + z0), float(np.sqrt(r2))


def fit_sphere_profile(
    profile: SurfaceProfile,
    base_plane_z: float = 0.0,
    convention: VolumeConvention = DEFAULT_CONVENTION,
) -> LensGeometry:
    """Fit a circle to the lens top and extrapolate the full lens down to ``base_plane_z``."""
    if len(profile) < 5:
        raise InsufficientData(f"sphere fit needs at least 5 samples, got {len(profile)}")
    _, zc, r = fit_circle(profile.x, profile.z)
    h = (zc - base_plane_z) + r
    if not (0 < h < 2 * r):
        raise ProfileInconsistent(
            f"fitted apex height {h:.6g} um is outside (0, {2 * r:.6g}) above the base plane"
        )
    return LensGeometry.from_diameter_and_sag(2 * r, h, convention)


def percent_error(measured: float, theory: float) -> float:
    return 100.0 * abs(theory - measured) / theory


def compare_to_theory(measured: MeasuredLens, theoretical: LensGeometry) -> ComparisonRow:
    return ComparisonRow(
        measured,
        theoretical,
        percent_error(measured.diameter, theoretical.sphere_diameter),
        percent_error(measured.height, theoretical.sag_height),
    )


def read_profile_csv(path: str | Path) -> SurfaceProfile:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != PROFILE_HEADER:
            raise InputFormatError(f"{path}: expected header {','.join(PROFILE_HEADER)}, got {header}")
        xs, zs = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise InputFormatError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
            try:
                xs.append(float(row[0]))
                zs.append(float(row[1]))
            except ValueError as exc:
                raise InputFormatError(f"{path}:{lineno}: {exc}") from exc
    return SurfaceProfile(np.array(xs), np.array(zs))


def write_profile_csv(path: str | Path, profile: SurfaceProfile) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(PROFILE_HEADER)
        for x, z in zip(profile.x, profile.z):
            writer.writerow([repr(float(x)), repr(float(z))])
