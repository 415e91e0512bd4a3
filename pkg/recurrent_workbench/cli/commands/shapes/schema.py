from pydantic import BaseModel


class AnchorDTO(BaseModel):
    """DTO for a direction anchor; scalars use the exact scalar grammar."""

    index: int
    side: int
    t: str
    direction: str


class CatalogDTO(BaseModel):
    """DTO for a shape template."""

    name: str
    vertices: list[str]
    lengths: list[str]
    anchors: list[AnchorDTO]
    chord_closed: bool
    symmetry_closed: bool
    perpendicular_sides: list[int]


class SegmentDTO(BaseModel):
    start: AnchorDTO
    end: AnchorDTO
    length: str


class BilliardDTO(BaseModel):
    """DTO for a billiard trace."""

    closed: bool
    period: int | None
    segments: list[SegmentDTO]
