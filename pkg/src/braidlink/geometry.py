"""Exact rational geometry of the bundled eight-line configuration.

The configuration lives in an affine chart (x, y, z) of projective 3-space:
the vertical axis line L is the z-axis, the line at infinity L' is the
common infinity line of the planes z = const, and the eight lines are two
quarter-turn orbits of the lines through p0 = (3,-1,-1), q0 = (3,1,1).
Everything is computed over the rationals; floating point never appears.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

Rational = Fraction

AXIS_LABEL = "L"
INFINITY_LABEL = "L'"

LINE_LABELS = ("l0", "l1", "l2", "l3", "l'0", "l'1", "l'2", "l'3")
DOUBLE_POINT_LABELS = ("p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3")


@dataclass(frozen=True)
class Point3:
    x: Rational
    y: Rational
    z: Rational


@dataclass(frozen=True)
class Vec3:
    x: Rational
    y: Rational
    z: Rational


@dataclass(frozen=True)
class SpaceLine:
    """Oriented affine line: base + t * direction, t in R."""

    label: str
    base: Point3
    direction: Vec3


def rotate_quarter_turn(p: Point3) -> Point3:
    """Rotation by 90 degrees around the z-axis: (x, y, z) -> (-y, x, z)."""
    return Point3(-p.y, p.x, p.z)


def _rotate_vec(v: Vec3) -> Vec3:
    return Vec3(-v.y, v.x, v.z)


def rotate_line(line: SpaceLine, new_label: str) -> SpaceLine:
    return SpaceLine(new_label, rotate_quarter_turn(line.base), _rotate_vec(line.direction))


def base_points() -> dict[str, Point3]:
    """The eight genuine double points p0..p3, q0..q3."""
    points = {"p0": Point3(Fraction(3), Fraction(-1), Fraction(-1)),
              "q0": Point3(Fraction(3), Fraction(1), Fraction(1))}
    for k in range(1, 4):
        points[f"p{k}"] = rotate_quarter_turn(points[f"p{k-1}"])
        points[f"q{k}"] = rotate_quarter_turn(points[f"q{k-1}"])
    return points


def _line_through(label: str, a: Point3, b: Point3) -> SpaceLine:
    d = Vec3(b.x - a.x, b.y - a.y, b.z - a.z)
    if d.z < 0:
        d = Vec3(-d.x, -d.y, -d.z)  # orient with dz > 0
    if d.z == 0:
        raise ValueError("configuration lines must not be horizontal")
    return SpaceLine(label, a, d)


def build_configuration() -> tuple[SpaceLine, ...]:
    """The eight lines: l_k through (p_k, q_k), l'_k through (p_k, q_(k+1)),
    all oriented with dz > 0."""
    pts = base_points()
    lines = []
    for k in range(4):
        lines.append(_line_through(f"l{k}", pts[f"p{k}"], pts[f"q{k}"]))
    for k in range(4):
        lines.append(_line_through(f"l'{k}", pts[f"p{k}"], pts[f"q{(k+1) % 4}"]))
    return tuple(lines)


def axis_line() -> SpaceLine:
    """The z-axis, oriented upward."""
    return SpaceLine(AXIS_LABEL, Point3(Fraction(0), Fraction(0), Fraction(0)),
                     Vec3(Fraction(0), Fraction(0), Fraction(1)))


def angular_momentum(line: SpaceLine) -> Rational:
    """The constant value of x dy - y dx along the line; positive exactly
    when the polar angle increases along the orientation."""
    return line.base.x * line.direction.y - line.base.y * line.direction.x


def point_on_line(line: SpaceLine, t: Rational) -> Point3:
    return Point3(
        line.base.x + t * line.direction.x,
        line.base.y + t * line.direction.y,
        line.base.z + t * line.direction.z,
    )


# -- projections ------------------------------------------------------------

@dataclass(frozen=True)
class Projection:
    """A coordinate projection of the space onto a drawing plane.

    plane(p) gives the drawing coordinates; depth(p) the complementary
    coordinate, oriented so that larger depth means closer to the viewer
    (the over strand).
    """

    name: str

    def plane(self, p: Point3) -> tuple[Rational, Rational]:
        if self.name == "oxy":
            return (p.x, p.y)
        return (p.x, p.z)

    def plane_vec(self, v: Vec3) -> tuple[Rational, Rational]:
        if self.name == "oxy":
            return (v.x, v.y)
        return (v.x, v.z)

    def depth(self, p: Point3) -> Rational:
        # Oxy is viewed from z = +infinity.  The Oxz picture arises from it
        # by rotating space around the x-axis, which points the y-axis away
        # from the viewer, so smaller y is closer.
        if self.name == "oxy":
            return p.z
        return -p.y


OXY = Projection("oxy")
OXZ = Projection("oxz")


def projection_named(name: str) -> Projection:
    if name == "oxy":
        return OXY
    if name == "oxz":
        return OXZ
    raise ValueError(f"unknown projection {name!r}")


@dataclass(frozen=True)
class ProjectedLine:
    """Image of a space line in the drawing plane: points with n . X = c."""

    label: str
    normal: tuple[int, int]
    offset: int
    direction: tuple[int, int]  # oriented image of the space direction
    source: SpaceLine
    projection: Projection

    def depth_at(self, point: tuple[Rational, Rational]) -> Rational:
        """Depth of the space line over a drawing-plane point on it."""
        d2 = self.projection.plane_vec(self.source.direction)
        b2 = self.projection.plane(self.source.base)
        if d2[0] != 0:
            t = Fraction(point[0] - b2[0], d2[0])
        else:
            t = Fraction(point[1] - b2[1], d2[1])
        return self.projection.depth(point_on_line(self.source, t))


def _primitive(a: Fraction | int, b: Fraction | int) -> tuple[int, int]:
    fa, fb = Fraction(a), Fraction(b)
    if fa == 0 and fb == 0:
        raise ValueError("zero direction")
    den = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
    ia, ib = int(fa * den), int(fb * den)
    g = gcd(abs(ia), abs(ib))
    return (ia // g, ib // g)


def upper_half_primitive(a, b) -> tuple[int, int]:
    """Primitive integer direction normalized modulo 180 degrees: second
    component positive, or zero with the first positive."""
    ia, ib = _primitive(a, b)
    if ib < 0 or (ib == 0 and ia < 0):
        ia, ib = -ia, -ib
    return (ia, ib)


def project_line(line: SpaceLine, projection: Projection) -> ProjectedLine:
    b2 = projection.plane(line.base)
    d2 = projection.plane_vec(line.direction)
    dprim = _primitive(*d2)
    normal = _primitive(d2[1], -d2[0])
    offset_frac = Fraction(normal[0]) * b2[0] + Fraction(normal[1]) * b2[1]
    # scale normal so the offset is an integer (configuration data is integral)
    if offset_frac.denominator != 1:
        normal = (normal[0] * offset_frac.denominator, normal[1] * offset_frac.denominator)
        offset_frac = offset_frac * offset_frac.denominator
    return ProjectedLine(line.label, normal, int(offset_frac), dprim, line, projection)


# -- crossings ---------------------------------------------------------------

@dataclass(frozen=True)
class CrossingEvent:
    """One event of a planar projection.

    kind "finite": a transversal crossing (position set, two labels, over
    and sign set) or a flagged double point of the space curve (sign and
    over unset, double_point carrying its name).  kind "at_infinity": two
    lines parallel in the projection meeting at infinity, a triple with the
    infinity line where that line is a strand of the picture.
    """

    kind: str
    labels: tuple[str, ...]
    angle: tuple[int, int] | None  # scan direction; None for a crossing at the origin
    position: tuple[Rational, Rational] | None = None
    over: str | None = None
    sign: int | None = None
    double_point: str | None = None
    positive_over: str | None = None  # which label is over if resolved positively


def _intersect(a: ProjectedLine, b: ProjectedLine) -> tuple[Rational, Rational] | None:
    det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0]
    if det == 0:
        return None
    x = Fraction(a.offset * b.normal[1] - b.offset * a.normal[1], det)
    y = Fraction(a.normal[0] * b.offset - b.normal[0] * a.offset, det)
    return (x, y)


def _match_double_point(
    position: tuple[Rational, Rational], projection: Projection
) -> str | None:
    for name, point in base_points().items():
        if projection.plane(point) == position:
            return name
    return None


def project_crossings(
    lines: tuple[SpaceLine, ...], projection: Projection | str
) -> list[CrossingEvent]:
    """All pairwise crossing events of the projected arrangement.

    Pairs meeting in space are flagged double points awaiting a smoothing
    choice; the other finite crossings carry exact over/under and sign.
    Projected-parallel pairs give at-infinity events; in the Oxy picture the
    line at infinity is a strand and those events are triple crossings.
    """
    if isinstance(projection, str):
        projection = projection_named(projection)
    projected = [project_line(line, projection) for line in lines]
    events: list[CrossingEvent] = []

    for i in range(len(projected)):
        for j in range(i + 1, len(projected)):
            a, b = projected[i], projected[j]
            position = _intersect(a, b)
            if position is None:
                labels = (a.label, b.label)
                if projection.name == "oxy":
                    labels = (a.label, b.label, INFINITY_LABEL)
                events.append(
                    CrossingEvent(
                        kind="at_infinity",
                        labels=labels,
                        angle=upper_half_primitive(*a.direction),
                    )
                )
                continue
            depth_a = a.depth_at(position)
            depth_b = b.depth_at(position)
            angle = None if position == (0, 0) else upper_half_primitive(*position)
            if depth_a == depth_b:
                name = _match_double_point(position, projection)
                if name is None:
                    raise RuntimeError(
                        f"unexpected spatial intersection of {a.label} and {b.label}"
                    )
                det = a.direction[0] * b.direction[1] - a.direction[1] * b.direction[0]
                events.append(
                    CrossingEvent(
                        kind="finite",
                        labels=(a.label, b.label),
                        angle=angle,
                        position=position,
                        double_point=name,
                        positive_over=a.label if det > 0 else b.label,
                    )
                )
                continue
            over, under = (a, b) if depth_a > depth_b else (b, a)
            det = over.direction[0] * under.direction[1] - over.direction[1] * under.direction[0]
            events.append(
                CrossingEvent(
                    kind="finite",
                    labels=(a.label, b.label),
                    angle=angle,
                    position=position,
                    over=over.label,
                    sign=1 if det > 0 else -1,
                )
            )
    events.sort(key=_event_sort_key)
    return events


def _event_sort_key(event: CrossingEvent):
    if event.angle is None:
        slope = (-1, Fraction(0))
    else:
        a, b = event.angle
        # angle in [0, pi) ordered by slope; horizontal first
        slope = (0, Fraction(0)) if b == 0 else (1, Fraction(-a, b))
    pos = event.position if event.position is not None else (Fraction(0), Fraction(0))
    return (slope, 0 if event.kind == "finite" else 1, pos, event.labels)


# -- smoothing ----------------------------------------------------------------

CROSSING_NEGATIVE = -1
CROSSING_POSITIVE = 1
SMOOTHED = 0


@dataclass(frozen=True)
class SmoothingChoice:
    """Resolution of each spatial double point of the perturbed curve:
    +1 / -1 keep a projected crossing of that sign, 0 reconnects the
    branches coherently so no crossing remains."""

    resolution: dict[str, int]

    def __post_init__(self):
        if set(self.resolution) != set(DOUBLE_POINT_LABELS):
            missing = set(DOUBLE_POINT_LABELS) - set(self.resolution)
            raise ValueError(f"smoothing choice missing points: {sorted(missing)}")
        for name, value in self.resolution.items():
            if value not in (-1, 0, 1):
                raise ValueError(f"invalid resolution {value!r} at {name}")

    @staticmethod
    def paper() -> "SmoothingChoice":
        """The bundled configuration's choice: a negative crossing at q0,
        coherent smoothing everywhere else."""
        res = {name: SMOOTHED for name in DOUBLE_POINT_LABELS}
        res["q0"] = CROSSING_NEGATIVE
        return SmoothingChoice(res)

    @staticmethod
    def all_positive() -> "SmoothingChoice":
        """The variant: the q0 crossing made positive instead."""
        res = {name: SMOOTHED for name in DOUBLE_POINT_LABELS}
        res["q0"] = CROSSING_POSITIVE
        return SmoothingChoice(res)


def smoothing_named(name: str) -> SmoothingChoice:
    if name == "paper":
        return SmoothingChoice.paper()
    if name == "all-positive":
        return SmoothingChoice.all_positive()
    raise ValueError(f"unknown smoothing {name!r}")


def apply_smoothing(
    events: list[CrossingEvent], choice: SmoothingChoice
) -> list[CrossingEvent]:
    """Resolve the flagged double points: crossings keep their chosen sign,
    smoothed points disappear from the event list; other events unchanged."""
    out = []
    for event in events:
        if event.double_point is None:
            out.append(event)
            continue
        resolution = choice.resolution[event.double_point]
        if resolution == SMOOTHED:
            continue
        a_label, b_label = event.labels
        if resolution == CROSSING_POSITIVE:
            over = event.positive_over
        else:
            over = b_label if event.positive_over == a_label else a_label
        out.append(replace(event, over=over, sign=resolution))
    return out


# -- serialization -------------------------------------------------------------

def _rational_str(value: Rational) -> str:
    return str(value)


def event_json_dict(event: CrossingEvent) -> dict:
    return {
        "kind": event.kind,
        "labels": list(event.labels),
        "angle": None if event.angle is None else [event.angle[0], event.angle[1]],
        "position": None
        if event.position is None
        else [_rational_str(event.position[0]), _rational_str(event.position[1])],
        "over": event.over,
        "sign": event.sign,
        "double_point": event.double_point,
    }


def crossings_json(events: list[CrossingEvent], projection: Projection | str) -> str:
    name = projection if isinstance(projection, str) else projection.name
    payload = {
        "schema": "braidlink/crossings/1",
        "projection": name,
        "events": [event_json_dict(e) for e in events],
    }
    return json.dumps(payload, indent=2)
