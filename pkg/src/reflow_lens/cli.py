"""Command-line entry point: ``reflow-lens <subcommand> ...``.

Exit codes: 0 success, 1 recipe check found errors, 2 usage or input
problems, 3 domain errors (inputs outside where the models are defined).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import conservation, metrology, recipe, spincoat
from .errors import InputFormatError, ReflowLensError
from .geometry import DEFAULT_ANGLE_DEG, DEFAULT_CONVENTION, LensGeometry, VolumeConvention
from .reference import REFERENCE_ROWS
from .svg import sweep_svg
from .wetting import SurfaceEnergies, classify_wetting, young_contact_angle

EXIT_OK, EXIT_RECIPE_ERRORS, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _parse_patterns(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty pattern list")
    return values


def _parse_omega(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except (IndexError, ValueError):
        raise argparse.ArgumentTypeError(f"expected MIN:MAX:STEPS, got {text!r}") from None
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected MIN:MAX:STEPS, got {text!r}")
    return lo, hi, steps


def _add_model_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--angle-deg", type=float, default=DEFAULT_ANGLE_DEG,
                   help="contact angle in degrees (default %(default)s)")
    p.add_argument("--convention", choices=[c.value for c in VolumeConvention],
                   default=DEFAULT_CONVENTION.value, help="lens volume convention (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reflow-lens", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forward", help="predict the lens from a resist column")
    p.add_argument("--pattern-um", type=float, required=True)
    p.add_argument("--thickness-um", type=float, required=True)
    _add_model_args(p)

    p = sub.add_parser("inverse", help="solve for the missing design variable")
    p.add_argument("--target-d-um", type=float, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pattern-um", type=float)
    g.add_argument("--thickness-um", type=float)
    _add_model_args(p)

    p = sub.add_parser("table3", help="reproduce the published 60/70/80 um comparison")
    p.add_argument("--text", action="store_true", help="print a rounded human-readable table instead of JSON")

    p = sub.add_parser("sweep", help="lens diameter and sag versus spin speed (CSV)")
    p.add_argument("--calib", required=True, help="calibration CSV with header spin_rpm,thickness_um")
    p.add_argument("--patterns", type=_parse_patterns, required=True, help="e.g. 60,70,80")
    p.add_argument("--omega", type=_parse_omega, required=True, help="MIN:MAX:STEPS in rpm")
    p.add_argument("--svg", help="also write an SVG chart to this path")
    p.add_argument("--out", help="write CSV here instead of stdout")
    _add_model_args(p)

    p = sub.add_parser("calibrate", help="fit thickness = a * rpm**b")
    p.add_argument("--points", required=True)

    p = sub.add_parser("wetting", help="Young angle and wetting regime")
    p.add_argument("--ssa", type=float, required=True, help="solid-air energy (mJ/m^2)")
    p.add_argument("--sls", type=float, required=True, help="liquid-solid energy (mJ/m^2)")
    p.add_argument("--sal", type=float, required=True, help="air-liquid energy (mJ/m^2)")

    p = sub.add_parser("profile", help="analyse a stylus profile CSV (x_um,z_um)")
    p.add_argument("mode", choices=["ra", "fit"])
    p.add_argument("--csv", required=True)
    p.add_argument("--base-z-um", type=float, default=0.0)
    _add_model_args(p)

    p = sub.add_parser("recipe", help="process recipe tools")
    p.add_argument("action", choices=["check", "reference"])
    p.add_argument("file", nargs="?")
    return parser


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _style(text: str, code: str) -> str:
    if os.environ.get("REFLOW_LENS_NO_COLOR") or not sys.stderr.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _cmd_forward(args) -> int:
    conv = VolumeConvention(args.convention)
    row = conservation.design_row(
        conservation.ResistPattern(args.pattern_um, args.thickness_um), args.angle_deg, conv
    )
    out = {"pattern_um": args.pattern_um, "thickness_um": args.thickness_um,
           "convention": conv.value, **row.predicted.as_dict()}
    _emit(out)
    return EXIT_OK


def _cmd_inverse(args) -> int:
    conv = VolumeConvention(args.convention)
    out = {"target_d_um": args.target_d_um, "angle_deg": args.angle_deg, "convention": conv.value}
    if args.pattern_um is not None:
        out["pattern_um"] = args.pattern_um
        out["thickness_um"] = conservation.required_thickness(
            args.target_d_um, args.pattern_um, args.angle_deg, conv)
    else:
        out["thickness_um"] = args.thickness_um
        out["pattern_um"] = conservation.required_pattern_diameter(
            args.target_d_um, args.thickness_um, args.angle_deg, conv)
    _emit(out)
    return EXIT_OK


def table3_rows() -> list[dict]:
    rows = []
    for ref in REFERENCE_ROWS:
        pattern = conservation.ResistPattern(ref.pattern_um, ref.theory_thickness_um)
        predicted = conservation.design_row(pattern).predicted
        printed = LensGeometry.from_diameter_and_sag(ref.theory_diameter_um, ref.theory_height_um)
        cmp = metrology.compare_to_theory(
            metrology.MeasuredLens(ref.measured_diameter_um, ref.measured_height_um), printed
        )
        rows.append({
            "pattern_um": ref.pattern_um,
            "thickness_um": ref.theory_thickness_um,
            "computed_diameter_um": predicted.sphere_diameter,
            "computed_height_um": predicted.sag_height,
            **cmp.as_dict(),
        })
    return rows


def _cmd_table3(args) -> int:
    rows = table3_rows()
    if not args.text:
        _emit(rows)
        return EXIT_OK
    cols = [
        ("pattern_um", "d_b"), ("thickness_um", "t_b"),
        ("computed_diameter_um", "D calc"), ("theory_diameter_um", "D theo"),
        ("measured_diameter_um", "D exp"), ("diameter_error_pct", "D err%"),
        ("computed_height_um", "h calc"), ("theory_height_um", "h theo"),
        ("measured_height_um", "h exp"), ("height_error_pct", "h err%"),
    ]
    lines = ["  ".join(f"{label:>8}" for _, label in cols)]
    for r in rows:
        cells = []
        for key, _ in cols:
            fmt = ".1f" if key.endswith("pct") else ".2f"
            cells.append(f"{r[key]:>8{fmt}}")
        lines.append("  ".join(cells))
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    model = spincoat.fit_spin_model(spincoat.read_calibration_csv(args.calib))
    lo, hi, steps = args.omega
    rows = spincoat.sweep_lens_vs_speed(
        model, args.patterns, args.angle_deg, VolumeConvention(args.convention), (lo, hi), steps
    )
    text = spincoat.format_sweep_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(sweep_svg(rows))
    return EXIT_OK


def _cmd_calibrate(args) -> int:
    model = spincoat.fit_spin_model(spincoat.read_calibration_csv(args.points))
    _emit(model.as_dict())
    return EXIT_OK


def _cmd_wetting(args) -> int:
    e = SurfaceEnergies(args.ssa, args.sls, args.sal)
    regime = classify_wetting(e)
    try:
        angle = young_contact_angle(e)
    except ReflowLensError:
        angle = None
    _emit({"regime": regime.value, "contact_angle_deg": angle})
    return EXIT_OK


def _cmd_profile(args) -> int:
    prof = metrology.read_profile_csv(args.csv)
    if args.mode == "ra":
        _emit({"ra_nm": metrology.roughness_ra(prof), "samples": len(prof)})
    else:
        lens = metrology.fit_sphere_profile(prof, args.base_z_um, VolumeConvention(args.convention))
        _emit({"base_z_um": args.base_z_um, **lens.as_dict()})
    return EXIT_OK


def _cmd_recipe(args) -> int:
    if args.action == "reference":
        sys.stdout.write(recipe.dumps(recipe.reference_recipe()) + "\n")
        return EXIT_OK
    if not args.file:
        raise _UsageError("recipe check needs a FILE argument")
    report = recipe.validate_recipe(recipe.load(args.file))
    sys.stdout.write(report.to_json() + "\n")
    n_err, n_warn = len(report.errors), len(report.warnings)
    summary = f"{n_err} error(s), {n_warn} warning(s)"
    sys.stderr.write(_style(summary, "31" if n_err else "32") + "\n")
    return EXIT_RECIPE_ERRORS if n_err else EXIT_OK


COMMANDS = {
    "forward": _cmd_forward,
    "inverse": _cmd_inverse,
    "table3": _cmd_table3,
    "sweep": _cmd_sweep,
    "calibrate": _cmd_calibrate,
    "wetting": _cmd_wetting,
    "profile": _cmd_profile,
    "recipe": _cmd_recipe,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (_UsageError, InputFormatError, OSError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"reflow-lens: error: {exc}\n")
        return EXIT_USAGE
    except ReflowLensError as exc:
        sys.stderr.write(f"reflow-lens: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
