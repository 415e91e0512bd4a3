from pydantic import BaseModel


class CertifyDTO(BaseModel):
    """DTO for an emitted dumbbell certificate."""

    base_edge: str
    t: str
    directions: list[str]
    paths: dict[str, int]
    violations: list[str]


class VerifyDTO(BaseModel):
    """DTO for a re-checked certificate; violations read ``clause: detail``."""

    valid: bool
    clauses: list[str]
    violations: list[str]
