"""Schematic SVG of a projected line arrangement.

Each line is drawn in two tones split where its complementary coordinate
changes sign (black positive, grey negative: z for the Oxy picture, y for
Oxz).  Crossings show the under strand interrupted by a white casing under
the over strand; unresolved or smoothed double points are marked with a
small circle.  The viewport is fixed to [-7, 7]^2, so output bytes are a
deterministic function of the input.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import (
    Projection,
    ProjectedLine,
    SmoothingChoice,
    SpaceLine,
    apply_smoothing,
    point_on_line,
    project_crossings,
    project_line,
    projection_named,
)

VIEW = Fraction(7)
SCALE = 40
TONE_POSITIVE = "#000000"
TONE_NEGATIVE = "#999999"


def _svg_coords(p: tuple[Fraction, Fraction]) -> tuple[float, float]:
    return (float((p[0] + VIEW) * SCALE), float((VIEW - p[1]) * SCALE))


def _fmt(p: tuple[Fraction, Fraction]) -> str:
    x, y = _svg_coords(p)
    return f"{x:.2f},{y:.2f}"


def _clip_parameter_range(line: ProjectedLine) -> tuple[Fraction, Fraction]:
    """Parameter range of source points whose projection lies in the box."""
    src = line.source
    proj = line.projection
    b = proj.plane(src.base)
    d = proj.plane_vec(src.direction)
    bounds: list[tuple[Fraction, Fraction]] = []
    for axis in (0, 1):
        if d[axis] == 0:
            continue
        t1 = Fraction(-VIEW - b[axis], d[axis])
        t2 = Fraction(VIEW - b[axis], d[axis])
        bounds.append((min(t1, t2), max(t1, t2)))
    lo = max(t[0] for t in bounds)
    hi = min(t[1] for t in bounds)
    return lo, hi


def _complement_sign_coordinate(line: SpaceLine, projection: Projection, t: Fraction) -> Fraction:
    point = point_on_line(line, t)
    return point.z if projection.name == "oxy" else point.y


def _line_segments(line: ProjectedLine) -> list[tuple[str, tuple, tuple]]:
    """(tone, start, end) pieces of the clipped line, split at the sign
    change of the complementary coordinate."""
    src, proj = line.source, line.projection
    lo, hi = _clip_parameter_range(line)
    if lo >= hi:
        return []
    comp_lo = _complement_sign_coordinate(src, proj, lo)
    comp_hi = _complement_sign_coordinate(src, proj, hi)

    def plane_at(t: Fraction):
        return proj.plane(point_on_line(src, t))

    if comp_lo == comp_hi:  # constant along the line
        tone = TONE_POSITIVE if comp_lo > 0 else TONE_NEGATIVE
        return [(tone, plane_at(lo), plane_at(hi))]
    t_zero = lo + (hi - lo) * Fraction(0 - comp_lo, comp_hi - comp_lo)
    pieces = []
    if lo < t_zero:
        tone = TONE_POSITIVE if comp_lo > 0 else TONE_NEGATIVE
        pieces.append((tone, plane_at(lo), plane_at(min(t_zero, hi))))
    if t_zero < hi:
        tone = TONE_POSITIVE if comp_hi > 0 else TONE_NEGATIVE
        pieces.append((tone, plane_at(max(t_zero, lo)), plane_at(hi)))
    return pieces


def emit_projection_svg(
    lines: tuple[SpaceLine, ...],
    projection: Projection | str,
    smoothing: SmoothingChoice | None = None,
) -> str:
    if isinstance(projection, str):
        projection = projection_named(projection)
    projected = {line.label: project_line(line, projection) for line in lines}
    events = project_crossings(lines, projection)
    if smoothing is not None:
        events = apply_smoothing(events, smoothing)

    size = float(2 * VIEW * SCALE)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" '
        f'height="{size:.0f}" viewBox="0 0 {size:.0f} {size:.0f}">',
        f'<rect width="{size:.0f}" height="{size:.0f}" fill="#ffffff"/>',
    ]
    for line in lines:
        out.append(f'<g class="line" id="line-{line.label}">')
        for tone, start, end in _line_segments(projected[line.label]):
            out.append(
                f'<polyline points="{_fmt(start)} {_fmt(end)}" fill="none" '
                f'stroke="{tone}" stroke-width="2"/>'
            )
        out.append("</g>")

    gap = Fraction(1, 4)
    for event in events:
        if event.position is None:
            continue
        if event.sign is None:
            # unresolved or smoothed double point
            cx, cy = _svg_coords(event.position)
            out.append(
                f'<circle class="double-point" cx="{cx:.2f}" cy="{cy:.2f}" '
                f'r="5" fill="#ffffff" stroke="#555555" stroke-dasharray="2,2"/>'
            )
            continue
        over_label = event.over
        if over_label is None:
            continue
        over = projected[over_label]
        d = over.direction
        norm = max(abs(d[0]), abs(d[1]))
        ux, uy = Fraction(d[0], norm), Fraction(d[1], norm)
        a = (event.position[0] - ux * gap, event.position[1] - uy * gap)
        b = (event.position[0] + ux * gap, event.position[1] + uy * gap)
        tone_coord = over.depth_at(event.position)
        if projection.name == "oxz":
            tone_coord = -tone_coord  # depth is -y; tone follows y itself
        tone = TONE_POSITIVE if tone_coord > 0 else TONE_NEGATIVE
        out.append(
            f'<g class="crossing"><polyline points="{_fmt(a)} {_fmt(b)}" '
            f'fill="none" stroke="#ffffff" stroke-width="8"/>'
            f'<polyline points="{_fmt(a)} {_fmt(b)}" fill="none" '
            f'stroke="{tone}" stroke-width="2"/></g>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
