from pydantic import BaseModel


class PiecesDTO(BaseModel):
    """DTO for the piece table of a presentation."""

    mode: str
    pieces: list[str]
    max_length: int
    relators: dict[str, list[int]]


class ConditionDTO(BaseModel):
    condition: str
    holds: bool
    witness: str | None


class SmallCancellationDTO(BaseModel):
    """DTO for small cancellation checks."""

    mode: str
    conditions: list[ConditionDTO]


class CornerSubwordsDTO(BaseModel):
    """DTO for the two relator halves found on the boundary of a least-area diagram."""

    word: str
    found: bool
    first: str | None = None
    first_position: int | None = None
    second: str | None = None
    second_position: int | None = None
    overlapping: bool | None = None
    area: int | None = None
