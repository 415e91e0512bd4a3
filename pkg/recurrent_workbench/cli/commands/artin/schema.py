from pydantic import BaseModel


class PresentationDTO(BaseModel):
    target: str
    generators: list[str]
    relators: list[str]


class FlagsDTO(BaseModel):
    """DTO for the flags of a labeled graph."""

    extra_large: bool
    triangle_with_two: bool
    two_dimensional: bool
    square_with_three_twos: bool
    triangles: list[list[str]]


class WordDTO(BaseModel):
    """DTO for a word problem answer."""

    word: str
    target: str
    trivial: bool
    normal_form: str
    delta_power: int | None = None


class WallDTO(BaseModel):
    """DTO for one hypergraph; the cycle lists the faces it runs through."""

    component: int
    edges: int
    faces: int
    forest: bool
    embedded: bool
    cycle: list[str]
    complement_components: int
    projection_consistent: bool | None = None


class BallDTO(BaseModel):
    """DTO for a Cayley ball."""

    target: str
    radius: int
    vertices: int
    edges: int
    faces: int
    walls: int
    forests: bool
    caveat: str


class HypergraphDTO(BaseModel):
    target: str
    radius: int
    walls: list[WallDTO]
    caveat: str


class ExampleDTO(BaseModel):
    """DTO for the 12-region diagram over the a, b, c triangle."""

    regions: int
    boundary_word: str
    central_labels: list[str]
    valid: bool
    reduced: bool
    walls: list[WallDTO]


class BlockDTO(BaseModel):
    word: str
    generators: list[str]
    label: int | None
    syllables: list[str]
    form: str | None
    projection: str


class BlocksDTO(BaseModel):
    word: str
    blocks: list[BlockDTO]


class ProbeDTO(BaseModel):
    """DTO for one wall probe; a missing wall lists the crossing candidates."""

    sigma: str
    tau: str
    shared_edge: str
    wall_sigma: int
    found: int | None
    rule: str | None
    candidates: list[str]


class WallProbeDTO(BaseModel):
    radius: int
    probes: int
    failures: list[ProbeDTO]
    caveat: str
