"""Write lens-diameter and sag-height vs spin-speed curves (CSV + SVG).

Usage: python scripts/spin_sweep_figures.py [CALIB_CSV] [OUT_DIR]
"""
import sys
from pathlib import Path

from reflow_lens.spincoat import fit_spin_model, format_sweep_csv, read_calibration_csv, sweep_lens_vs_speed
from reflow_lens.svg import sweep_svg

ROOT = Path(__file__).resolve().parents[1]


def main(argv):
    calib = Path(argv[0]) if argv else ROOT / "data" / "calibration_synthetic.csv"
    out = Path(argv[1]) if len(argv) > 1 else ROOT / "out"
    out.mkdir(parents=True, exist_ok=True)
    model = fit_spin_model(read_calibration_csv(calib))
    print(f"fit: t = {model.coefficient:.4g} * rpm^{model.exponent:.4f}  (rms log residual {model.rms_log_residual:.2e})")
    rows = sweep_lens_vs_speed(model, [60.0, 70.0, 80.0], speed_range=(1000.0, 6000.0), steps=51)
    (out / "sweep.csv").write_text(format_sweep_csv(rows))
    (out / "sweep.svg").write_text(sweep_svg(rows))
    print(f"wrote {out / 'sweep.csv'} and {out / 'sweep.svg'}")


if __name__ == "__main__":
    main(sys.argv[1:])
