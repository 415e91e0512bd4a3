"""
Shape catalog, chords and billiards.

Anchor sets follow the closed billiard trajectories of each shape: every
anchor's chord ends at another anchor, and every side carries a
perpendicular anchor.
"""
import logging
import re
from fractions import Fraction
from typing import Iterable, Optional

from recurrent_workbench.exceptions import UnknownShapeError, VertexHitError
from recurrent_workbench.models.shapes import (
    BilliardTrace,
    ChordSegment,
    DirectionAnchor,
    Isometry,
    ShapeTemplate,
)
from recurrent_workbench.services.planar import (
    Vec,
    add,
    cross,
    dot,
    neg,
    scale,
    sub,
    unit_direction,
    vec,
)
from recurrent_workbench.services.quadratic import ONE, SQRT2, SQRT3, ZERO, QuadNumber

logger = logging.getLogger(__name__)

HALF = QuadNumber(Fraction(1, 2))
QUARTER = QuadNumber(Fraction(1, 4))
THREE_QUARTERS = QuadNumber(Fraction(3, 4))

_GON_NAME = re.compile(r"Gon\((\d+)\)")
# 2n-gons whose vertices have coordinates in Q(sqrt2, sqrt3)
SUPPORTED_HALF_SIDES = (2, 3, 4, 6, 12)


def _anchor(side: int, t: QuadNumber, step: int) -> DirectionAnchor:
    return DirectionAnchor(side=side, t=t, direction=unit_direction(step))


def _reflection_x(width: QuadNumber) -> Isometry:
    """Mirror ``x -> width - x``."""
    return Isometry(
        name="mirror",
        matrix=(vec(-1, 0), vec(0, 1)),
        offset=(width, ZERO),
    )


def _rotation_about(center: Vec, step: int) -> Isometry:
    cos, sin = unit_direction(step)
    matrix = ((cos, -sin), (sin, cos))
    turned = (dot(matrix[0], center), dot(matrix[1], center))
    return Isometry(name=f"rotation{step * 15}", matrix=matrix, offset=sub(center, turned))


def equilateral() -> ShapeTemplate:
    """
    Equilateral triangle of side 1.

    :return: template with twelve anchors.
    """
    vertices = (vec(0, 0), vec(1, 0), (HALF, SQRT3 / 2))
    anchors = []
    for side in range(3):
        base = 8 * side
        anchors.extend(
            (
                _anchor(side, QUARTER, base + 6),
                _anchor(side, THREE_QUARTERS, base + 6),
                _anchor(side, HALF, base + 2),
                _anchor(side, HALF, base + 10),
            ),
        )
    center = (HALF, SQRT3 / 6)
    return ShapeTemplate(
        name="Equilateral",
        vertices=vertices,
        lengths=(ONE, ONE, ONE),
        anchors=tuple(anchors),
        symmetries=(_rotation_about(center, 8), _reflection_x(ONE)),
    )


def tri_q244() -> ShapeTemplate:
    """
    Right isosceles triangle with its legs of length 1.

    The hypotenuse (side 1) carries perpendiculars at 1/4 and 3/4 and
    two 45 degree directions at its midpoint; each leg midpoint carries
    its perpendicular and both 45 degree directions.

    :return: template with ten anchors.
    """
    vertices = (vec(0, 0), vec(1, 0), vec(0, 1))
    anchors = (
        _anchor(0, HALF, 3),
        _anchor(0, HALF, 6),
        _anchor(0, HALF, 9),
        _anchor(1, QUARTER, 15),
        _anchor(1, HALF, 12),
        _anchor(1, HALF, 18),
        _anchor(1, THREE_QUARTERS, 15),
        _anchor(2, HALF, 21),
        _anchor(2, HALF, 0),
        _anchor(2, HALF, 3),
    )
    swap = Isometry(name="swap", matrix=(vec(0, 1), vec(1, 0)), offset=vec(0, 0))
    return ShapeTemplate(
        name="TriQ244",
        vertices=vertices,
        lengths=(ONE, SQRT2, ONE),
        anchors=anchors,
        symmetries=(swap,),
    )


def tri_h236() -> ShapeTemplate:
    """
    Half of an equilateral triangle, angles 90, 30 and 60 degrees.

    Anchors are those of two closed billiards: one leaves the short leg
    midpoint perpendicularly (period 6), the other leaves the long leg
    perpendicularly at 1/4 (period 10).

    :return: template with sixteen anchors.
    """
    vertices = (vec(0, 0), (HALF, ZERO), (ZERO, SQRT3 / 6))
    two_thirds = QuadNumber(Fraction(2, 3))
    anchors = (
        _anchor(0, QUARTER, 6),
        _anchor(0, HALF, 2),
        _anchor(0, HALF, 10),
        _anchor(0, two_thirds, 4),
        _anchor(0, two_thirds, 8),
        _anchor(0, THREE_QUARTERS, 6),
        _anchor(1, QUARTER, 14),
        _anchor(1, QUARTER, 16),
        _anchor(1, QUARTER, 18),
        _anchor(1, HALF, 12),
        _anchor(1, HALF, 20),
        _anchor(1, THREE_QUARTERS, 14),
        _anchor(1, THREE_QUARTERS, 18),
        _anchor(2, HALF, 0),
        _anchor(2, HALF, 2),
        _anchor(2, HALF, 22),
    )
    return ShapeTemplate(
        name="TriH236",
        vertices=vertices,
        lengths=(HALF, SQRT3 / 3, SQRT3 / 6),
        anchors=anchors,
    )


def regular_gon(sides: int) -> ShapeTemplate:
    """
    Regular polygon with unit sides and perpendicular anchors at 1/4, 3/4.

    :param sides: even side count 2n with n in 2, 3, 4, 6, 12.
    :raises UnknownShapeError: for unsupported side counts.
    :return: template.
    """
    if sides % 2 or sides // 2 not in SUPPORTED_HALF_SIDES:
        raise UnknownShapeError(f"unsupported polygon Gon({sides})")
    turn = 24 // sides
    points = [vec(0, 0)]
    for index in range(sides - 1):
        points.append(add(points[-1], unit_direction(index * turn)))
    vertices = tuple(points)
    anchors = []
    for side in range(sides):
        step = side * turn + 6
        anchors.append(_anchor(side, QUARTER, step))
        anchors.append(_anchor(side, THREE_QUARTERS, step))
    center = scale(QuadNumber(Fraction(1, sides)), _vector_sum(vertices))
    return ShapeTemplate(
        name=f"Gon({sides})",
        vertices=vertices,
        lengths=tuple(ONE for _ in range(sides)),
        anchors=tuple(anchors),
        symmetries=(_rotation_about(center, turn), _reflection_x(ONE)),
    )


def _vector_sum(points: Iterable[Vec]) -> Vec:
    total = vec(0, 0)
    for point in points:
        total = add(total, point)
    return total


class ShapeCatalog:
    """Named shape templates, built on first use."""

    def __init__(self) -> None:
        self._templates: dict[str, ShapeTemplate] = {}

    def register(self, template: ShapeTemplate) -> None:
        """
        Add or replace a template.

        :param template: shape to make resolvable by its name.
        """
        self._templates[template.name] = template

    def resolve(self, name: str) -> ShapeTemplate:
        """
        Find a template by name.

        :param name: TriQ244, TriH236, Equilateral, UnitSquare or Gon(2n).
        :raises UnknownShapeError: for names outside the catalog.
        :return: template.
        """
        if name in self._templates:
            return self._templates[name]
        template = self._build(name)
        self._templates[name] = template
        return template

    def _build(self, name: str) -> ShapeTemplate:
        if name == "TriQ244":
            return tri_q244()
        if name == "TriH236":
            return tri_h236()
        if name == "Equilateral":
            return equilateral()
        if name == "UnitSquare":
            square = regular_gon(4)
            return ShapeTemplate(
                name=name,
                vertices=square.vertices,
                lengths=square.lengths,
                anchors=square.anchors,
                symmetries=square.symmetries,
            )
        match = _GON_NAME.fullmatch(name)
        if match is None:
            raise UnknownShapeError(f"unknown shape {name!r}")
        sides = int(match.group(1))
        if sides < 4:
            raise UnknownShapeError(f"Gon({sides}) needs at least 4 sides")
        return regular_gon(sides)


catalog = ShapeCatalog()


def shape_catalog(name: str) -> ShapeTemplate:
    return catalog.resolve(name)


def locate(shape: ShapeTemplate, point: Vec) -> Optional[tuple[int, QuadNumber]]:
    """
    Side and position of a boundary point.

    :param shape: polygon.
    :param point: point in shape coordinates.
    :return: (side, t) with t in [0, 1), or None off the boundary.
    """
    for side in range(shape.side_count):
        along = shape.side_vector(side)
        offset = sub(point, shape.vertices[side])
        if cross(along, offset) != ZERO:
            continue
        t = dot(offset, along) / dot(along, along)
        if ZERO <= t < ONE:
            return side, t
    return None


def chord(shape: ShapeTemplate, anchor: DirectionAnchor) -> ChordSegment:
    """
    Follow the anchor direction straight across the polygon.

    :param shape: polygon.
    :param anchor: starting anchor, direction pointing inward.
    :raises VertexHitError: when the segment ends at a polygon vertex.
    :return: segment whose end anchor points back along the segment.
    """
    start = shape.anchor_point(anchor)
    travel = anchor.direction
    best: Optional[tuple[QuadNumber, int, QuadNumber]] = None
    for side in range(shape.side_count):
        if side == anchor.side:
            continue
        along = shape.side_vector(side)
        denominator = cross(travel, along)
        if denominator == ZERO:
            continue
        offset = sub(shape.vertices[side], start)
        distance = cross(offset, along) / denominator
        where = cross(offset, travel) / denominator
        if distance <= ZERO or where < ZERO or where > ONE:
            continue
        if best is None or distance < best[0]:
            best = (distance, side, where)
    if best is None:
        raise VertexHitError(f"{shape.name}: no exit from {_describe(anchor)}")
    distance, side, where = best
    if where in (ZERO, ONE):
        raise VertexHitError(f"{shape.name}: vertex hit from {_describe(anchor)}")
    end = DirectionAnchor(side=side, t=where, direction=neg(travel))
    return ChordSegment(start=anchor, end=end, length=distance)


def reflect(shape: ShapeTemplate, anchor: DirectionAnchor) -> DirectionAnchor:
    """
    Specular reflection of an arrival anchor at its side.

    The tangential component of the direction is negated, the normal
    component is kept, so the result again points inward.

    :param shape: polygon.
    :param anchor: anchor carrying the reversed arrival direction.
    :return: anchor for the outgoing direction.
    """
    along = shape.side_vector(anchor.side)
    tangential = scale(dot(anchor.direction, along) / dot(along, along), along)
    bounced = sub(anchor.direction, scale(QuadNumber(2), tangential))
    return DirectionAnchor(side=anchor.side, t=anchor.t, direction=bounced)


def billiard_trace(shape: ShapeTemplate, anchor: DirectionAnchor, max_bounces: int) -> BilliardTrace:
    """
    Iterate chord and reflection from an anchor.

    :param shape: polygon.
    :param anchor: starting anchor.
    :param max_bounces: segments to follow before giving up.
    :raises ValueError: when max_bounces is below 1.
    :return: closed trajectory or the open prefix.
    """
    if max_bounces < 1:
        raise ValueError("max_bounces must be at least 1")
    segments: list[ChordSegment] = []
    current = anchor
    for _ in range(max_bounces):
        segment = chord(shape, current)
        segments.append(segment)
        current = reflect(shape, segment.end)
        if current == anchor:
            logger.debug("%s: trajectory closed after %d segments", shape.name, len(segments))
            return BilliardTrace(start=anchor, segments=tuple(segments), closed=True)
    return BilliardTrace(start=anchor, segments=tuple(segments), closed=False)


def map_anchor(shape: ShapeTemplate, isometry: Isometry, anchor: DirectionAnchor) -> Optional[DirectionAnchor]:
    """
    Image of an anchor under a symmetry.

    :param shape: polygon.
    :param isometry: plane isometry.
    :param anchor: anchor to move.
    :return: image anchor, None when the image point is off the boundary.
    """
    found = locate(shape, isometry.apply(shape.anchor_point(anchor)))
    if found is None:
        return None
    side, t = found
    return DirectionAnchor(side=side, t=t, direction=isometry.linear(anchor.direction))


def symmetry_closed(shape: ShapeTemplate) -> bool:
    """
    Check that every listed symmetry maps the anchor set onto itself.

    :param shape: template.
    :return: True when the anchor set is invariant.
    """
    for isometry in shape.symmetries:
        for anchor in shape.anchors:
            if map_anchor(shape, isometry, anchor) not in shape.anchor_set:
                return False
    return True


def chord_closed(shape: ShapeTemplate) -> bool:
    """
    Check that every anchor's chord ends at an anchor.

    :param shape: template.
    :return: True when the anchor set is closed under chords.
    """
    try:
        return all(chord(shape, anchor).end in shape.anchor_set for anchor in shape.anchors)
    except VertexHitError:
        return False


def perpendicular_sides(shape: ShapeTemplate) -> frozenset[int]:
    """Sides carrying an anchor perpendicular to them."""
    return frozenset(
        anchor.side
        for anchor in shape.anchors
        if dot(anchor.direction, shape.side_vector(anchor.side)) == ZERO
    )


def _describe(anchor: DirectionAnchor) -> str:
    return f"side {anchor.side} at t={anchor.t}"
