"""Lens-diameter range reachable from 60-80 um patterns at 5-25 um resist thickness."""
import numpy as np

from reflow_lens.conservation import ResistPattern, forward_lens_diameter
from reflow_lens.geometry import VolumeConvention

for conv in VolumeConvention:
    diam = [
        forward_lens_diameter(ResistPattern(d, t), 116.0, conv)
        for d in (60.0, 70.0, 80.0)
        for t in np.linspace(5.0, 25.0, 201)
    ]
    print(f"{conv.value:>13}: {min(diam):6.1f} .. {max(diam):6.1f} um")
# D scales as (d^2 t)^(1/3): the max/min ratio here is ((80/60)^2 * 5)^(1/3)
print(f"max/min ratio {((80 / 60) ** 2 * 5) ** (1 / 3):.3f}; 110/30 = {110 / 30:.3f}")
