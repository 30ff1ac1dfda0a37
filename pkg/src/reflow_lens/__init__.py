"""Design and analysis tools for thermal-reflow micro-ball lenses."""
from .conservation import (
    DesignRow,
    ResistPattern,
    design_table,
    forward_lens_diameter,
    required_pattern_diameter,
    required_thickness,
)
from .geometry import (
    LensGeometry,
    VolumeConvention,
    cap_fill_fraction,
    column_volume,
    contact_angle_from_profile,
    contact_radius,
    lens_volume,
    oracle_volume,
    sag_height,
)

__version__ = "0.1.0"

__all__ = [
    "DesignRow",
    "LensGeometry",
    "ResistPattern",
    "VolumeConvention",
    "cap_fill_fraction",
    "column_volume",
    "contact_angle_from_profile",
    "contact_radius",
    "design_table",
    "forward_lens_diameter",
    "lens_volume",
    "oracle_volume",
    "required_pattern_diameter",
    "required_thickness",
    "sag_height",
]
