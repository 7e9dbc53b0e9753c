from fractions import Fraction

import pytest

from braidlink.geometry import (
    INFINITY_LABEL,
    CrossingEvent,
    SmoothingChoice,
    apply_smoothing,
    angular_momentum,
    base_points,
    build_configuration,
    crossings_json,
    project_crossings,
    project_line,
    rotate_line,
    rotate_quarter_turn,
    upper_half_primitive,
    OXY,
    OXZ,
    Point3,
)


def lines_by_label():
    return {line.label: line for line in build_configuration()}


def on_line(line, point):
    d = line.direction
    b = line.base
    if d.x != 0:
        t = Fraction(point.x - b.x, d.x)
    elif d.y != 0:
        t = Fraction(point.y - b.y, d.y)
    else:
        t = Fraction(point.z - b.z, d.z)
    return (
        b.x + t * d.x == point.x
        and b.y + t * d.y == point.y
        and b.z + t * d.z == point.z
    )


def test_rotation_orbit_of_base_points():
    points = base_points()
    assert points["p0"] == Point3(Fraction(3), Fraction(-1), Fraction(-1))
    assert points["q0"] == Point3(Fraction(3), Fraction(1), Fraction(1))
    assert points["p1"] == Point3(Fraction(1), Fraction(3), Fraction(-1))
    assert points["q1"] == Point3(Fraction(-1), Fraction(3), Fraction(1))
    # the quarter turn has order four
    p = points["p0"]
    for _ in range(4):
        p = rotate_quarter_turn(p)
    assert p == points["p0"]


def test_configuration_incidences():
    lines = lines_by_label()
    points = base_points()
    for k in range(4):
        assert on_line(lines[f"l{k}"], points[f"p{k}"])
        assert on_line(lines[f"l{k}"], points[f"q{k}"])
        assert on_line(lines[f"l'{k}"], points[f"p{k}"])
        assert on_line(lines[f"l'{k}"], points[f"q{(k + 1) % 4}"])


def test_orientation_dz_positive():
    for line in build_configuration():
        assert line.direction.z > 0


def test_angular_form_positive_on_all_lines():
    for line in build_configuration():
        assert angular_momentum(line) > 0


def test_quarter_turn_symmetry_with_label_shift():
    lines = lines_by_label()
    for k in range(4):
        rotated = rotate_line(lines[f"l{k}"], f"l{(k + 1) % 4}")
        target = lines[f"l{(k + 1) % 4}"]
        assert on_line(target, rotated.base)
        d, e = rotated.direction, target.direction
        assert d.x * e.y == d.y * e.x and d.x * e.z == d.z * e.x


def test_oxy_projection_of_l0_is_vertical():
    line = project_line(lines_by_label()["l0"], OXY)
    # x = 3 in the drawing plane
    assert line.normal[1] == 0
    assert Fraction(line.offset, line.normal[0]) == 3


def test_oxy_crossing_census():
    events = project_crossings(build_configuration(), OXY)
    finite = [e for e in events if e.kind == "finite" and e.double_point is None]
    doubles = [e for e in events if e.double_point is not None]
    triples = [e for e in events if e.kind == "at_infinity"]
    assert len(finite) == 16
    assert len(doubles) == 8
    assert len(triples) == 4
    assert {e.double_point for e in doubles} == {
        "p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3"
    }
    positions = {e.position for e in finite}
    assert (Fraction(2), Fraction(0)) in positions
    assert (Fraction(-2), Fraction(0)) in positions
    assert (Fraction(5), Fraction(3)) in positions
    # all sixteen annotated coordinates, nothing else
    expected = {
        (2, 0), (-2, 0), (0, 2), (0, -2),
        (3, 3), (-3, -3), (-3, 3), (3, -3),
        (5, 3), (-5, -3), (-3, 5), (3, -5),
        (3, 5), (-3, -5), (-5, 3), (5, -3),
    }
    assert {(int(p[0]), int(p[1])) for p in positions} == expected
    # every honest crossing of this configuration is positive
    assert {e.sign for e in finite} == {1}


def test_crossing_participants():
    events = project_crossings(build_configuration(), OXY)
    at = {e.position: e for e in events if e.position is not None}
    assert set(at[(Fraction(5), Fraction(3))].labels) == {"l1", "l'3"}
    assert set(at[(Fraction(2), Fraction(0))].labels) == {"l'0", "l'3"}
    assert at[(Fraction(3), Fraction(1))].double_point == "q0"


def test_infinity_triples_have_direction_classes():
    events = project_crossings(build_configuration(), OXY)
    triples = [e for e in events if e.kind == "at_infinity"]
    assert {e.angle for e in triples} == {(1, 0), (0, 1), (1, 1), (-1, 1)}
    for e in triples:
        assert INFINITY_LABEL in e.labels
        assert len(e.labels) == 3


def test_oxz_projection():
    events = project_crossings(build_configuration(), OXZ)
    doubles = [e for e in events if e.double_point is not None]
    triples = [e for e in events if e.kind == "at_infinity"]
    finite = [e for e in events if e.kind == "finite" and e.double_point is None]
    assert len(doubles) == 8
    assert len(triples) == 3  # three parallel classes in this view
    assert len(finite) == 17
    # over/under comes from the y comparison in this view
    for e in finite:
        assert e.over in e.labels


def test_smoothing_choices():
    paper = SmoothingChoice.paper()
    assert paper.resolution["q0"] == -1
    assert all(paper.resolution[p] == 0 for p in paper.resolution if p != "q0")
    variant = SmoothingChoice.all_positive()
    assert variant.resolution["q0"] == 1
    with pytest.raises(ValueError):
        SmoothingChoice({"q0": -1})
    with pytest.raises(ValueError):
        SmoothingChoice({name: 5 for name in paper.resolution})


def test_apply_smoothing_paper_choice():
    events = project_crossings(build_configuration(), OXY)
    smoothed = apply_smoothing(events, SmoothingChoice.paper())
    crossings = [e for e in smoothed if e.kind == "finite"]
    assert len(crossings) == 17  # sixteen honest ones plus q0
    q0 = [e for e in crossings if e.double_point == "q0"]
    assert len(q0) == 1
    assert q0[0].sign == -1
    assert q0[0].over in q0[0].labels
    assert not any(e.double_point in {"p0", "p1", "p2", "p3", "q1", "q2", "q3"}
                   for e in smoothed)


def test_apply_smoothing_variant_choice():
    events = project_crossings(build_configuration(), OXY)
    smoothed = apply_smoothing(events, SmoothingChoice.all_positive())
    signs = {e.sign for e in smoothed if e.kind == "finite"}
    assert signs == {1}


def test_upper_half_primitive():
    assert upper_half_primitive(4, 2) == (2, 1)
    assert upper_half_primitive(-4, -2) == (2, 1)
    assert upper_half_primitive(3, 0) == (1, 0)
    assert upper_half_primitive(-3, 0) == (1, 0)
    assert upper_half_primitive(Fraction(1, 2), Fraction(-1, 3)) == (-3, 2)
    with pytest.raises(ValueError):
        upper_half_primitive(0, 0)


def test_crossings_json_round_trip():
    import json

    events = project_crossings(build_configuration(), OXY)
    payload = json.loads(crossings_json(events, OXY))
    assert payload["schema"] == "braidlink/crossings/1"
    assert payload["projection"] == "oxy"
    assert len(payload["events"]) == 28
    positions = {tuple(e["position"]) for e in payload["events"] if e["position"]}
    assert ("2", "0") in positions
    # exact rational strings, never floats
    for event in payload["events"]:
        if event["position"] is not None:
            for coordinate in event["position"]:
                assert isinstance(coordinate, str)
