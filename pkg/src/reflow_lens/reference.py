"""Published measurements of AZ4620 ball lenses reflowed on PTFE at 116 degrees.

``theory_thickness_um`` is not published; it is the resist thickness that
reproduces each row's predicted diameter under the default volume
convention (21.0 um for the 80 and 70 um patterns, 22.9 um for 60 um).
"""
from __future__ import annotations

from dataclasses import dataclass

CONTACT_ANGLE_DEG = 116.0
ROUGHNESS_RA_NM = 7.6  # mean of 10 scans over 20 um; raw data unavailable
ACHIEVABLE_DIAMETER_UM = (30.0, 110.0)


@dataclass(frozen=True)
class ReferenceRow:
    pattern_um: float
    theory_thickness_um: float
    measured_diameter_um: float
    theory_diameter_um: float
    diameter_error_pct: float
    measured_height_um: float
    theory_height_um: float
    height_error_pct: float


REFERENCE_ROWS = (
    ReferenceRow(80.0, 21.0, 98.20, 101.59, 3.3, 70.18, 73.07, 4.0),
    ReferenceRow(70.0, 21.0, 89.21, 92.94, 4.0, 62.18, 66.80, 6.9),
    # 60.00 disagrees with R(1 - cos 116) = 62.13 from its own 86.39 diameter; likely a misprint
    ReferenceRow(60.0, 22.9, 82.32, 86.39, 4.7, 56.95, 60.00, 5.1),
)
