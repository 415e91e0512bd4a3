"""Shape catalog, chords and billiards."""
from fractions import Fraction

import pytest

from recurrent_workbench.exceptions import UnknownShapeError, VertexHitError
from recurrent_workbench.models.shapes import DirectionAnchor
from recurrent_workbench.services.planar import unit_direction
from recurrent_workbench.services.quadratic import ONE, SQRT2, SQRT3, QuadNumber
from recurrent_workbench.services.shapes import (
    HALF,
    QUARTER,
    THREE_QUARTERS,
    ShapeCatalog,
    billiard_trace,
    catalog,
    chord,
    chord_closed,
    perpendicular_sides,
    reflect,
    regular_gon,
    symmetry_closed,
)

NAMES = ["TriQ244", "TriH236", "Equilateral", "UnitSquare", "Gon(4)", "Gon(6)", "Gon(8)", "Gon(12)"]


def test_catalog_metrics() -> None:
    """Tests vertices and side lengths of the triangles."""
    q244 = catalog.resolve("TriQ244")
    assert q244.lengths == (ONE, SQRT2, ONE)
    h236 = catalog.resolve("TriH236")
    assert h236.lengths == (HALF, SQRT3 / 3, SQRT3 / 6)
    assert h236.vertices[2] == (QuadNumber(0), SQRT3 / 6)
    assert catalog.resolve("Equilateral").side_count == 3


@pytest.mark.parametrize("name", NAMES)
def test_anchor_sets_are_closed(name: str) -> None:
    """Tests chord closure, symmetry closure and perpendicular anchors on every side."""
    shape = catalog.resolve(name)
    assert chord_closed(shape)
    assert symmetry_closed(shape)
    assert perpendicular_sides(shape) == frozenset(range(shape.side_count))


@pytest.mark.parametrize("name", ["Gon(10)", "Gon(3)", "Gon(7)", "Pentagon"])
def test_unknown_shapes(name: str) -> None:
    """Tests names outside the catalog."""
    with pytest.raises(UnknownShapeError):
        catalog.resolve(name)


def test_catalog_caches_and_registers() -> None:
    """Tests that templates are built once and custom ones can be added."""
    shapes = ShapeCatalog()
    assert shapes.resolve("Gon(6)") is shapes.resolve("Gon(6)")
    octagon = regular_gon(8)
    shapes.register(octagon)
    assert shapes.resolve("Gon(8)") is octagon


def test_square_chord() -> None:
    """Tests the perpendicular chord of the unit square."""
    square = catalog.resolve("UnitSquare")
    segment = chord(square, DirectionAnchor(side=0, t=QUARTER, direction=unit_direction(6)))
    assert segment.end.side == 2
    assert segment.end.t == THREE_QUARTERS
    assert segment.end.direction == unit_direction(18)
    assert segment.length == ONE


def test_chord_into_a_vertex() -> None:
    """Tests that a chord through the apex of the triangle raises."""
    triangle = catalog.resolve("Equilateral")
    with pytest.raises(VertexHitError):
        chord(triangle, DirectionAnchor(side=0, t=HALF, direction=unit_direction(6)))


def test_reflect_keeps_perpendicular_direction() -> None:
    """Tests that a perpendicular arrival is reflected onto itself."""
    square = catalog.resolve("UnitSquare")
    arrival = DirectionAnchor(side=2, t=THREE_QUARTERS, direction=unit_direction(18))
    assert reflect(square, arrival) == arrival


def test_reflect_flips_tangential_component() -> None:
    """Tests reflection of an oblique arrival."""
    square = catalog.resolve("UnitSquare")
    arrival = DirectionAnchor(side=0, t=HALF, direction=unit_direction(3))
    assert reflect(square, arrival).direction == unit_direction(9)


def test_square_billiard_closes() -> None:
    """Tests the period two perpendicular billiard of the square."""
    square = catalog.resolve("UnitSquare")
    trace = billiard_trace(square, square.anchors[0], max_bounces=8)
    assert trace.closed
    assert trace.period == 2
    assert square.anchors[0] in trace.visited


def test_billiard_cut_after_bounce_limit() -> None:
    """Tests an open trace and the bounce limit check."""
    shape = catalog.resolve("TriH236")
    anchor = DirectionAnchor(side=0, t=QUARTER, direction=unit_direction(6))
    trace = billiard_trace(shape, anchor, max_bounces=1)
    assert not trace.closed
    assert trace.period is None
    assert len(trace.segments) == 1
    with pytest.raises(ValueError):
        billiard_trace(shape, anchor, max_bounces=0)


def test_h236_long_leg_billiard_closes() -> None:
    """Tests the billiard leaving the long leg perpendicularly."""
    shape = catalog.resolve("TriH236")
    anchor = DirectionAnchor(side=0, t=QUARTER, direction=unit_direction(6))
    trace = billiard_trace(shape, anchor, max_bounces=64)
    assert trace.closed
    assert trace.visited <= shape.anchor_set


def test_gon_anchor_positions() -> None:
    """Tests perpendicular anchors at one and three quarters of each side."""
    hexagon = catalog.resolve("Gon(6)")
    assert len(hexagon.anchors) == 12
    assert {anchor.t for anchor in hexagon.anchors} == {QuadNumber(Fraction(1, 4)), QuadNumber(Fraction(3, 4))}


def _at(side: int, t: Fraction, step: int) -> DirectionAnchor:
    return DirectionAnchor(side=side, t=QuadNumber(t), direction=unit_direction(step))


Q244_PERPENDICULAR = frozenset(
    {
        _at(1, Fraction(1, 4), 15),
        _at(0, Fraction(1, 2), 3),
        _at(0, Fraction(1, 2), 9),
        _at(2, Fraction(1, 2), 3),
        _at(2, Fraction(1, 2), 21),
        _at(1, Fraction(3, 4), 15),
    },
)
Q244_DIAGONAL = frozenset(
    {
        _at(1, Fraction(1, 2), 12),
        _at(2, Fraction(1, 2), 0),
        _at(1, Fraction(1, 2), 18),
        _at(0, Fraction(1, 2), 6),
    },
)
H236_SHORT_LEG = frozenset(
    {
        _at(2, Fraction(1, 2), 0),
        _at(1, Fraction(1, 2), 12),
        _at(1, Fraction(1, 2), 20),
        _at(0, Fraction(2, 3), 4),
        _at(0, Fraction(2, 3), 8),
        _at(1, Fraction(1, 4), 16),
    },
)
H236_LONG_LEG = frozenset(
    {
        _at(0, Fraction(1, 4), 6),
        _at(1, Fraction(3, 4), 14),
        _at(1, Fraction(3, 4), 18),
        _at(2, Fraction(1, 2), 2),
        _at(2, Fraction(1, 2), 22),
        _at(0, Fraction(1, 2), 2),
        _at(0, Fraction(1, 2), 10),
        _at(1, Fraction(1, 4), 14),
        _at(1, Fraction(1, 4), 18),
        _at(0, Fraction(3, 4), 6),
    },
)


@pytest.mark.parametrize(
    "name, start, period, visited",
    [
        ("TriQ244", _at(1, Fraction(1, 4), 15), 6, Q244_PERPENDICULAR),
        ("TriQ244", _at(1, Fraction(1, 2), 12), 4, Q244_DIAGONAL),
        ("TriH236", _at(2, Fraction(1, 2), 0), 6, H236_SHORT_LEG),
        ("TriH236", _at(0, Fraction(1, 4), 6), 10, H236_LONG_LEG),
    ],
)
def test_triangle_billiard_periods(
    name: str,
    start: DirectionAnchor,
    period: int,
    visited: frozenset[DirectionAnchor],
) -> None:
    """Tests the period and the anchors met by each closed triangle billiard."""
    shape = catalog.resolve(name)
    trace = billiard_trace(shape, start, max_bounces=32)
    assert trace.closed
    assert trace.period == period
    assert trace.visited == visited


def test_h236_short_leg_billiard_crosses_hypotenuse_midpoint() -> None:
    """Tests that the perpendicular from the short leg midpoint lands on the hypotenuse midpoint."""
    shape = catalog.resolve("TriH236")
    segment = chord(shape, _at(2, Fraction(1, 2), 0))
    assert segment.end == _at(1, Fraction(1, 2), 12)
    assert reflect(shape, segment.end) == _at(1, Fraction(1, 2), 20)


@pytest.mark.parametrize(
    "name, anchors",
    [
        ("TriQ244", Q244_PERPENDICULAR | Q244_DIAGONAL),
        ("TriH236", H236_SHORT_LEG | H236_LONG_LEG),
    ],
)
def test_triangle_anchor_sets_are_exact(name: str, anchors: frozenset[DirectionAnchor]) -> None:
    """Tests that a triangle's anchors are exactly those of its two closed billiards."""
    shape = catalog.resolve(name)
    assert shape.anchor_set == anchors
    assert len(shape.anchors) == len(anchors)
