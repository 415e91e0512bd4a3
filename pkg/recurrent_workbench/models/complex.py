"""Finite polygonal 2-complexes."""
import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from recurrent_workbench.services.quadratic import QuadNumber


@dataclass(frozen=True, order=True)
class EdgeRef:
    """Directed use of an edge: forward runs tail to head."""

    edge: str
    forward: bool = True

    def reversed(self) -> "EdgeRef":
        return EdgeRef(edge=self.edge, forward=not self.forward)

    @property
    def sign(self) -> str:
        return "+" if self.forward else "-"

    def __str__(self) -> str:
        return f"{self.edge}{self.sign}"


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    length: QuadNumber


@dataclass(frozen=True)
class Face:
    """
    Polygonal cell.

    ``sides[k]`` is the shape side glued along boundary position ``k``.
    """

    id: str
    boundary: tuple[EdgeRef, ...]
    shape: Optional[str] = None
    sides: Optional[tuple[int, ...]] = None

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def orientation(self) -> int:
        """+1 when shape sides follow the boundary order, -1 otherwise."""
        if self.sides is None or self.size < 2:
            return 1
        step = (self.sides[1] - self.sides[0]) % self.size
        return 1 if step == 1 else -1


@dataclass(frozen=True)
class ComplexSpec:
    """Validated complex: vertices, edges and faces with unique ids."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...] = field(default=())

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {edge.id: edge for edge in self.edges}

    @cached_property
    def face_map(self) -> dict[str, Face]:
        return {face.id: face for face in self.faces}

    @cached_property
    def traversals(self) -> dict[str, tuple[tuple[str, int], ...]]:
        """
        Face traversals per edge.

        :return: edge id -> ((face id, boundary position), ...), in face order.
        """
        found: dict[str, list[tuple[str, int]]] = {edge.id: [] for edge in self.edges}
        for face in self.faces:
            for position, ref in enumerate(face.boundary):
                found[ref.edge].append((face.id, position))
        return {edge: tuple(uses) for edge, uses in found.items()}

    def start(self, ref: EdgeRef) -> str:
        edge = self.edge_map[ref.edge]
        return edge.tail if ref.forward else edge.head

    def end(self, ref: EdgeRef) -> str:
        edge = self.edge_map[ref.edge]
        return edge.head if ref.forward else edge.tail

    def face_vertices(self, face: Face) -> tuple[str, ...]:
        """Corner vertices in boundary order."""
        return tuple(self.start(ref) for ref in face.boundary)


class ComplexClass(str, enum.Enum):  # noqa: WPS600
    """Degree classification of a complex."""

    NOT_ESSENTIAL = "not-essential"
    ESSENTIAL = "essential"
    THICK = "thick"


class GalleryKind(str, enum.Enum):  # noqa: WPS600
    """Classification of a gallery component."""

    SPHERE = "sphere"
    DISK = "disk"
    CLOSED_SURFACE = "closed-surface"
    SURFACE_WITH_BOUNDARY = "surface-with-boundary"
    PSEUDOMANIFOLD_NONSURFACE = "pseudomanifold-nonsurface"
    NOT_PSEUDOMANIFOLD = "not-pseudomanifold"


@dataclass(frozen=True)
class GalleryComponent:
    faces: frozenset[str]
    edges: frozenset[str]
    boundary_edges: frozenset[str]
    vertices: frozenset[str]
    euler_characteristic: int
    kind: GalleryKind

    @property
    def least_face(self) -> str:
        return min(self.faces)


@dataclass(frozen=True)
class WiseComplex:
    """Nerve of the closed 2-cells, up to dimension 2."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    triangles: tuple[tuple[str, str, str], ...]
    attached: tuple[str, ...] = ()
