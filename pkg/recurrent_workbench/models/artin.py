"""Labeled graphs, Cayley balls, hypergraphs and the reports of the Artin lab."""
import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from recurrent_workbench.models.complex import ComplexSpec


class Target(str, enum.Enum):  # noqa: WPS600
    """Group defined by a labeled graph."""

    ARTIN = "artin"
    COXETER = "coxeter"


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on generator names, edges labeled by integers m >= 2."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...] = ()

    @cached_property
    def labels(self) -> dict[frozenset[str], int]:
        return {frozenset((first, second)): label for first, second, label in self.edges}

    def label(self, first: str, second: str) -> Optional[int]:
        """Edge label, None for non-adjacent generators."""
        return self.labels.get(frozenset((first, second)))


@dataclass(frozen=True)
class GraphFlags:
    extra_large: bool
    triangle_with_two: bool
    two_dimensional: bool
    square_with_three_twos: bool
    triangles: tuple[tuple[str, str, str], ...] = ()


@dataclass(frozen=True)
class DihedralElement:
    """Element r^k (rotation) or r^k a (reflection) of the dihedral group, r = ab."""

    kind: str
    k: int
    m: int

    @property
    def order(self) -> int:
        if self.kind == "reflection":
            return 2
        return self.m // math.gcd(self.k, self.m)

    def __str__(self) -> str:
        return f"{self.kind} {self.k}"


@dataclass(frozen=True)
class DihedralVerdict:
    trivial: bool
    normal_form: tuple[str, ...]
    element: Optional[DihedralElement] = None
    delta_power: Optional[int] = None


@dataclass(frozen=True)
class CayleyBall:
    """
    Ball around the identity in a Cayley complex.

    ``elements`` maps each vertex to its normal-form word and
    ``edge_generators`` each edge to the generator it is labeled by;
    edges run from g to g s.
    """

    complex_spec: ComplexSpec
    root: str
    radius: int
    target: Target
    graph: LabeledGraph
    elements: dict[str, tuple[str, ...]] = field(default_factory=dict)
    edge_generators: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Hypergraph:
    """
    Connected component of the dual graph pairing antipodal edges.

    ``pairs`` lists (face, position, first edge, second edge) for every
    antipodal pair the component uses.
    """

    component: int
    edges: frozenset[str]
    pairs: tuple[tuple[str, int, str, str], ...]
    forest: bool
    embedded: bool
    cycle: tuple[str, ...] = ()
    complement_components: int = 0
    notes: tuple[str, ...] = ()

    @cached_property
    def faces(self) -> frozenset[str]:
        return frozenset(pair[0] for pair in self.pairs)


@dataclass(frozen=True)
class HypergraphProjection:
    """Image of an Artin wall in a Coxeter ball."""

    consistent: bool
    coxeter_wall: Optional[Hypergraph]
    missing_edges: tuple[str, ...] = ()


@dataclass(frozen=True)
class BlockRun:
    """Maximal two-generator factor of a word and the dihedral block it lives in."""

    word: tuple[str, ...]
    generators: tuple[str, ...]
    label: Optional[int]
    syllables: tuple[tuple[str, int], ...]
    form: Optional[str] = None
    projection: str = "1"


@dataclass(frozen=True)
class WallProbeResult:
    sigma: str
    tau: str
    shared_edge: str
    wall_sigma: int
    found: Optional[Hypergraph]
    rule: Optional[str] = None
    candidates: tuple[tuple[str, str], ...] = ()
    caveat: Optional[str] = None
