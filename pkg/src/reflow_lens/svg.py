"""Minimal SVG line charts for spin-speed sweeps."""
from __future__ import annotations

from collections import defaultdict
from typing import Sequence
from xml.sax.saxutils import escape

from .spincoat import SweepRow

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
PANEL_W, PANEL_H = 420, 300
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 60, 20, 30, 45


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi == lo:
        return [lo]
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def _panel(curves: dict[float, list[tuple[float, float]]], x0: int, title: str, ylabel: str) -> list[str]:
    xs = [p[0] for pts in curves.values() for p in pts]
    ys = [p[1] for pts in curves.values() for p in pts]
    xlo, xhi = min(xs), max(xs)
    ylo, yhi = min(ys), max(ys)
    if xhi == xlo:
        xlo, xhi = xlo - 1, xhi + 1
    if yhi == ylo:
        ylo, yhi = ylo - 1, yhi + 1
    pad = 0.05 * (yhi - ylo)
    ylo, yhi = ylo - pad, yhi + pad
    left, top = x0 + MARGIN_L, MARGIN_T
    w = PANEL_W - MARGIN_L - MARGIN_R
    h = PANEL_H - MARGIN_T - MARGIN_B

    def sx(x):
        return left + (x - xlo) / (xhi - xlo) * w

    def sy(y):
        return top + h - (y - ylo) / (yhi - ylo) * h

    out = [
        f'<rect x="{left}" y="{top}" width="{w}" height="{h}" fill="none" stroke="#000"/>',
        f'<text x="{left + w / 2:.1f}" y="{top - 10}" text-anchor="middle" font-size="13">{escape(title)}</text>',
        f'<text x="{left + w / 2:.1f}" y="{PANEL_H - 8}" text-anchor="middle" font-size="12">spin speed (rpm)</text>',
        f'<text x="{x0 + 14}" y="{top + h / 2:.1f}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 {x0 + 14} {top + h / 2:.1f})">{escape(ylabel)}</text>',
    ]
    for t in _ticks(xlo, xhi):
        out.append(f'<text x="{sx(t):.1f}" y="{top + h + 15}" text-anchor="middle" font-size="10">{t:.0f}</text>')
    for t in _ticks(ylo, yhi):
        out.append(f'<text x="{left - 5}" y="{sy(t) + 3:.1f}" text-anchor="end" font-size="10">{t:.1f}</text>')
    for k, (d, pts) in enumerate(sorted(curves.items())):
        color = PALETTE[k % len(PALETTE)]
        path = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        out.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = top + 14 + 14 * k
        out.append(f'<line x1="{left + w - 70}" y1="{ly - 4}" x2="{left + w - 55}" y2="{ly - 4}" stroke="{color}"/>')
        out.append(f'<text x="{left + w - 50}" y="{ly}" font-size="10">d = {d:g} um</text>')
    return out


def sweep_svg(rows: Sequence[SweepRow]) -> str:
    """Two panels side by side: lens diameter and sag height against spin speed."""
    if not rows:
        raise ValueError("no sweep rows to plot")
    diam = defaultdict(list)
    sag = defaultdict(list)
    for r in rows:
        diam[r.pattern_diameter].append((r.spin_speed, r.lens_diameter))
        sag[r.pattern_diameter].append((r.spin_speed, r.sag_height))
    body = _panel(diam, 0, "Lens diameter", "diameter (um)") + _panel(sag, PANEL_W, "Sag height", "height (um)")
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{2 * PANEL_W}" height="{PANEL_H}" '
        f'viewBox="0 0 {2 * PANEL_W} {PANEL_H}" font-family="sans-serif">\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )
