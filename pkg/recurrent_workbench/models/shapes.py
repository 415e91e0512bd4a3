"""Metrized cell shapes and their direction anchors."""
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from recurrent_workbench.services.planar import Vec, add, dot, rot90, scale, sub
from recurrent_workbench.services.quadratic import QuadNumber


@dataclass(frozen=True)
class DirectionAnchor:
    """
    Inward direction at an interior point of a polygon side.

    ``t`` is measured along the side in its counterclockwise direction.
    """

    side: int
    t: QuadNumber
    direction: Vec

    def sort_key(self) -> tuple[int, QuadNumber, QuadNumber, QuadNumber]:
        return (self.side, self.t, self.direction[0], self.direction[1])


@dataclass(frozen=True)
class Isometry:
    """Plane isometry ``p -> matrix * p + offset``."""

    name: str
    matrix: tuple[Vec, Vec]
    offset: Vec

    def linear(self, v: Vec) -> Vec:
        row0, row1 = self.matrix
        return (dot(row0, v), dot(row1, v))

    def apply(self, point: Vec) -> Vec:
        return add(self.linear(point), self.offset)


@dataclass(frozen=True)
class ShapeTemplate:
    """
    Convex polygon with counterclockwise vertices and exact side lengths.

    Side ``k`` runs from vertex ``k`` to vertex ``k + 1``.
    """

    name: str
    vertices: tuple[Vec, ...]
    lengths: tuple[QuadNumber, ...]
    anchors: tuple[DirectionAnchor, ...]
    symmetries: tuple[Isometry, ...] = ()

    @property
    def side_count(self) -> int:
        return len(self.vertices)

    @cached_property
    def anchor_set(self) -> frozenset[DirectionAnchor]:
        return frozenset(self.anchors)

    def side_vector(self, side: int) -> Vec:
        start = self.vertices[side]
        end = self.vertices[(side + 1) % self.side_count]
        return sub(end, start)

    def side_unit(self, side: int) -> Vec:
        """
        Unit vector along a side.

        :param side: side index.
        :return: exact unit vector.
        """
        return scale(1 / self.lengths[side], self.side_vector(side))

    def inward_normal(self, side: int) -> Vec:
        return rot90(self.side_unit(side))

    def point(self, side: int, t: QuadNumber) -> Vec:
        return add(self.vertices[side], scale(t, self.side_vector(side)))

    def anchor_point(self, anchor: DirectionAnchor) -> Vec:
        return self.point(anchor.side, anchor.t)


@dataclass(frozen=True)
class ChordSegment:
    """
    Straight segment across a polygon between two anchors.

    ``end`` carries the reversed travel direction, so it points back
    into the polygon.
    """

    start: DirectionAnchor
    end: DirectionAnchor
    length: QuadNumber

    def reversed(self) -> "ChordSegment":
        return ChordSegment(start=self.end, end=self.start, length=self.length)


@dataclass(frozen=True)
class BilliardTrace:
    """Billiard trajectory from an anchor, closed or cut after a bounce limit."""

    start: DirectionAnchor
    segments: tuple[ChordSegment, ...]
    closed: bool

    @property
    def period(self) -> Optional[int]:
        if not self.closed:
            return None
        return len(self.segments)

    @property
    def visited(self) -> frozenset[DirectionAnchor]:
        """Anchors met on the way, leaving and arriving."""
        found: set[DirectionAnchor] = set()
        for segment in self.segments:
            found.add(segment.start)
            found.add(segment.end)
        return frozenset(found)
