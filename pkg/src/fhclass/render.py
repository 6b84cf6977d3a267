"""Static SVG pictures of a map's image grid or boundary curve.

Output is a pure function of the inputs: fixed canvas, fixed number
formatting, no timestamps or random ids.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .geometry import boundary_trace
from .harmap import HarmonicPolyMap, eval_map, theta_derivative

CANVAS = 600
PAD = 30
GRID_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
SPOKES = 24


def _transform(curves):
    pts = np.concatenate(curves)
    lo_x, hi_x = pts.real.min(), pts.real.max()
    lo_y, hi_y = pts.imag.min(), pts.imag.max()
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-12)
    scale = (CANVAS - 2 * PAD) / span
    cx, cy = (lo_x + hi_x) / 2, (lo_y + hi_y) / 2

    def to_canvas(w):
        x = CANVAS / 2 + (w.real - cx) * scale
        y = CANVAS / 2 - (w.imag - cy) * scale
        return x, y

    return to_canvas


def _polyline(to_canvas, w, stroke, width, closed=False):
    x, y = to_canvas(np.asarray(w))
    coords = " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(x, y))
    tag = "polygon" if closed else "polyline"
    return f'<{tag} points="{coords}" fill="none" stroke="{stroke}" stroke-width="{width}"/>'


def _document(body, title, comment=""):
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f"<title>{title}</title>",
    ]
    if comment:
        head.append(f"<!-- {comment} -->")
    head.append(f'<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>')
    return "\n".join(head + body + ["</svg>", ""])


def grid_image_svg(f: HarmonicPolyMap, r_max: float = 0.999) -> str:
    """Images of concentric circles and radial segments."""
    theta = 2 * np.pi * np.arange(512) / 512
    circles = [eval_map(f, r * np.exp(1j * theta)) for r in (*GRID_RADII, r_max)]
    s = np.linspace(0, r_max, 200)
    spokes = [eval_map(f, s * np.exp(2j * np.pi * k / SPOKES)) for k in range(SPOKES)]
    to_canvas = _transform(circles + spokes)
    body = [_polyline(to_canvas, c, "#1f4e99", 1, closed=True) for c in circles]
    body += [_polyline(to_canvas, sp, "#b03a2e", 0.8) for sp in spokes]
    return _document(body, "image of the disk grid")


def boundary_curve_svg(f: HarmonicPolyMap, M: int = 4096) -> str:
    """Closed boundary trace with cusps (near-stationary points) marked."""
    trace = boundary_trace(f, M)
    z = np.exp(2j * np.pi * np.arange(M) / M)
    speed = np.abs(theta_derivative(f, z))
    is_min = (speed <= np.roll(speed, 1)) & (speed <= np.roll(speed, -1))
    cusps = np.flatnonzero(is_min & (speed < 1e-2 * speed.max()))
    to_canvas = _transform([trace.points])
    body = [_polyline(to_canvas, trace.points[:-1], "#1f4e99", 1.2, closed=True)]
    for k in cusps:
        x, y = to_canvas(trace.points[k])
        body.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="#b03a2e"/>')
    comment = f"length={trace.length:.9f} winding={trace.winding_about_origin} cusps={len(cusps)}"
    return _document(body, "boundary curve", comment)


def render(f: HarmonicPolyMap, path, style: str = "boundary_curve", r_max: float = 0.999) -> str:
    if style == "grid_image":
        svg = grid_image_svg(f, r_max)
    elif style == "boundary_curve":
        svg = boundary_curve_svg(f)
    else:
        raise ValueError(f"unknown style {style!r}")
    Path(path).write_text(svg)
    return svg
