from pydantic import BaseModel


class ConditionDTO(BaseModel):
    """DTO for one recurrence condition; passed is None when undecided."""

    name: str
    passed: bool | None
    detail: str
    offenders: list[str]


class RecurrenceDTO(BaseModel):
    """DTO for the recurrence report of a complex."""

    token_count: int
    face_counts: dict[str, int]
    conditions: list[ConditionDTO]
    acyclic: bool | None
    returns_to_involution: bool | None
    b0: int
    b1: int
    simply_connected_asserted: bool
    warnings: list[str]


class MarkovDTO(BaseModel):
    """
    DTO for the transition digraph.

    Sums are exact rationals written as fractions.
    """

    nodes: int
    arcs: int
    dead_ends: list[str]
    stationary: bool
    witness: str | None
    row_sums: dict[str, str]
    column_sums: dict[str, str]
