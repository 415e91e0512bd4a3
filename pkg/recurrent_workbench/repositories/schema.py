"""File DTOs; every file format is validated through these models."""
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Sign = Literal["+", "-"]
DartDocument = tuple[str, Sign]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


class EdgeDocument(_Document):
    """DTO for complex edges."""

    id: str
    ends: tuple[str, str]
    length: str = "1"


class FaceDocument(_Document):
    """DTO for complex faces."""

    id: str
    boundary: list[DartDocument]
    shape: Optional[str] = None
    sides: Optional[list[int]] = None


class ComplexDocument(_Document):
    """DTO for complex files (.cx)."""

    vertices: list[str]
    edges: list[EdgeDocument] = Field(default_factory=list)
    faces: list[FaceDocument] = Field(default_factory=list)


class DiagramEdgeDocument(_Document):
    """DTO for labeled diagram edges."""

    id: str
    ends: tuple[str, str]
    letter: str


class RegionDocument(_Document):
    """DTO for diagram regions, boundary read counterclockwise."""

    id: str
    boundary: list[DartDocument]
    marker: Optional[str] = None


class DiagramDocument(_Document):
    """DTO for diagram files (.dg)."""

    vertices: list[str]
    edges: list[DiagramEdgeDocument] = Field(default_factory=list)
    regions: list[RegionDocument] = Field(default_factory=list)
    boundary: list[DartDocument] = Field(default_factory=list)


class PresentationDocument(_Document):
    """DTO for presentation files (.pr), upper case letters are inverses."""

    generators: list[str]
    relators: list[str] = Field(default_factory=list)


class LabeledGraphDocument(_Document):
    """DTO for labeled graph files (.lg)."""

    vertices: list[str]
    edges: list[tuple[str, str, int]] = Field(default_factory=list)


class TokenDocument(_Document):
    """DTO for direction tokens."""

    face: str
    position: int
    edge: str
    forward: bool
    t: str
    alpha: str
    beta: str


class ChordDocument(_Document):
    """DTO for one chord of a certificate path, in shape coordinates."""

    face: str
    start: tuple[str, str]
    end: tuple[str, str]
    length: str


class CertificatePathDocument(_Document):
    """DTO for a certificate path."""

    name: str
    tokens: list[TokenDocument]
    chords: list[ChordDocument]
    length: str


class CertificateDocument(_Document):
    """DTO for dumbbell certificate files (.cert)."""

    base_edge: str
    t: str
    directions: list[TokenDocument] = Field(min_length=3, max_length=3)
    paths: list[CertificatePathDocument]


class ArcDocument(_Document):
    """DTO for transition digraph arcs."""

    source: int
    target: int
    probability: str


class DigraphDocument(_Document):
    """DTO for transition digraph dumps."""

    nodes: list[TokenDocument]
    arcs: list[ArcDocument]
