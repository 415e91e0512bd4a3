from pydantic import BaseModel


class ValidateDTO(BaseModel):
    """DTO for a validated complex."""

    vertices: int
    edges: int
    faces: int
    complex_class: str
    euler_characteristic: int


class GalleryDTO(BaseModel):
    """DTO for one gallery component."""

    faces: list[str]
    kind: str
    euler_characteristic: int
    boundary_edges: list[str]


class AnalyzeDTO(BaseModel):
    """
    DTO for the analysis of a complex.

    Homology ranks are over the rationals.
    """

    degrees: dict[str, int]
    complex_class: str
    thick_edges: list[str]
    galleries: list[GalleryDTO]
    spheres: int
    euler_characteristic: int
    b0: int
    b1: int


class SurgeryDTO(BaseModel):
    """DTO for collapse, subdivision and coning."""

    faces_before: int
    faces_after: int
    edges_before: int
    edges_after: int
    euler_before: int
    euler_after: int


class WiseDTO(BaseModel):
    """DTO for the nerve of the 2-cell covering."""

    faces: int
    vertices: int
    edges: int
    triangles: int
    attached: list[str]
