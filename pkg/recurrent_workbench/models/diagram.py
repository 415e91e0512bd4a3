"""Presentations, planar diagrams and the reports computed on them."""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from recurrent_workbench.models.complex import EdgeRef


@dataclass(frozen=True)
class Presentation:
    """Finite presentation; relators are cyclically reduced letter tuples."""

    generators: tuple[str, ...]
    relators: tuple[tuple[str, ...], ...] = ()


@dataclass(frozen=True)
class DiagramEdge:
    id: str
    tail: str
    head: str
    letter: str


@dataclass(frozen=True)
class Region:
    """Region with its boundary read counterclockwise."""

    id: str
    boundary: tuple[EdgeRef, ...]
    marker: Optional[str] = None


@dataclass(frozen=True)
class PlanarDiagram:
    """
    Labeled planar disc diagram.

    Darts are EdgeRefs. ``boundary`` is the disc boundary read
    counterclockwise, so the outer face runs through the reversed darts.
    """

    vertices: tuple[str, ...]
    edges: tuple[DiagramEdge, ...]
    regions: tuple[Region, ...]
    boundary: tuple[EdgeRef, ...] = field(default=())

    @cached_property
    def edge_map(self) -> dict[str, DiagramEdge]:
        return {edge.id: edge for edge in self.edges}

    @cached_property
    def region_map(self) -> dict[str, Region]:
        return {region.id: region for region in self.regions}

    @cached_property
    def boundary_edges(self) -> frozenset[str]:
        return frozenset(dart.edge for dart in self.boundary)

    @cached_property
    def boundary_vertices(self) -> frozenset[str]:
        return frozenset(self.start(dart) for dart in self.boundary)

    @cached_property
    def valence(self) -> dict[str, int]:
        """Edge ends at each vertex; a loop counts twice."""
        counts = {vertex: 0 for vertex in self.vertices}
        for edge in self.edges:
            counts[edge.tail] += 1
            counts[edge.head] += 1
        return counts

    def start(self, dart: EdgeRef) -> str:
        edge = self.edge_map[dart.edge]
        return edge.tail if dart.forward else edge.head

    def end(self, dart: EdgeRef) -> str:
        edge = self.edge_map[dart.edge]
        return edge.head if dart.forward else edge.tail


@dataclass(frozen=True)
class DiagramVerdict:
    violations: tuple[tuple[str, str], ...] = ()
    mirror_edges: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def reduced(self) -> bool:
        return not self.mirror_edges


@dataclass(frozen=True)
class StripReport:
    spikes: tuple[str, ...]
    interior_degrees: dict[str, int]
    simple_boundary_regions: tuple[str, ...]
    singleton_strips: tuple[str, ...]
    compound_strips: tuple[tuple[str, ...], ...]
    c4: bool
    t4: bool
    case: Optional[str] = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class PieceTable:
    """
    Pieces of a presentation.

    ``max_pieces[k][i]`` is the length of the longest piece starting at
    position ``i`` of relator ``k``.
    """

    mode: str
    pieces: frozenset[tuple[str, ...]]
    max_pieces: tuple[tuple[int, ...], ...]

    @property
    def max_length(self) -> int:
        return max((len(piece) for piece in self.pieces), default=0)


@dataclass(frozen=True)
class SmallCancellationVerdict:
    condition: str
    holds: bool
    witness: Optional[str] = None


@dataclass(frozen=True)
class SeparatingVertices:
    region: str
    positive_start: str
    negative_start: str
    exposed: bool


@dataclass(frozen=True)
class DiagramSearchResult:
    diagram: Optional[PlanarDiagram]
    area: Optional[int]
    explored_states: int
    exhausted: bool
    collar: bool = False


@dataclass(frozen=True)
class CornerSubwords:
    """Two relator halves read on the boundary, as (text, position in the word)."""

    first: tuple[str, int]
    second: tuple[str, int]
    overlapping: bool
    area: int
