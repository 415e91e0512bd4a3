from pydantic import BaseModel


class DiagramValidityDTO(BaseModel):
    """DTO for diagram validation; violations read ``location: message``."""

    regions: int
    boundary_word: str
    region_labels: dict[str, str]
    violations: list[str]
    mirror_edges: list[str]
    valid: bool
    reduced: bool


class StripsDTO(BaseModel):
    """DTO for strips and the strip trichotomy."""

    spikes: list[str]
    interior_degrees: dict[str, int]
    simple_boundary_regions: list[str]
    singleton_strips: list[str]
    compound_strips: list[list[str]]
    c4: bool
    t4: bool
    case: str | None
    notes: list[str]


class SearchDTO(BaseModel):
    """DTO for a least-area diagram search."""

    boundary: str
    found: bool
    area: int | None
    explored_states: int
    exhausted: bool
    collar: bool
    region_labels: dict[str, str]


class ExportDTO(BaseModel):
    regions: int
    edges: int
