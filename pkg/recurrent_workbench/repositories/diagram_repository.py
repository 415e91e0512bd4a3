from pathlib import Path

from recurrent_workbench.exceptions import FileFormatError
from recurrent_workbench.models.complex import EdgeRef
from recurrent_workbench.models.diagram import DiagramEdge, PlanarDiagram, Region
from recurrent_workbench.repositories.files import (
    dump_document,
    parse_document,
    read_document,
    write_document,
)
from recurrent_workbench.repositories.schema import (
    DartDocument,
    DiagramDocument,
    DiagramEdgeDocument,
    RegionDocument,
)


def _darts(location: str, darts: list[DartDocument], edges: set[str]) -> tuple[EdgeRef, ...]:
    for index, (edge, _) in enumerate(darts):
        if edge not in edges:
            raise FileFormatError(f"unknown edge {edge!r}", location=f"{location}.{index}")
    return tuple(EdgeRef(edge, sign == "+") for edge, sign in darts)


def _refs(darts: tuple[EdgeRef, ...]) -> list[DartDocument]:
    return [(dart.edge, "+" if dart.forward else "-") for dart in darts]


class DiagramRepository:
    """Class for reading and writing diagram files (.dg)."""

    def load(self, path: Path) -> PlanarDiagram:
        return self.from_document(read_document(path, DiagramDocument))

    def loads(self, text: str) -> PlanarDiagram:
        return self.from_document(parse_document(text, DiagramDocument))

    def dumps(self, d: PlanarDiagram) -> str:
        return dump_document(self.to_document(d))

    def save(self, d: PlanarDiagram, path: Path) -> Path:
        return write_document(path, self.to_document(d))

    @staticmethod
    def from_document(document: DiagramDocument) -> PlanarDiagram:
        """
        Build a diagram, checking that every reference is known.

        Planarity and labels are checked later by the diagram validator.

        :param document: DTO.
        :raises FileFormatError: for unknown vertices or edges.
        :return: diagram.
        """
        vertices = set(document.vertices)
        for index, raw_edge in enumerate(document.edges):
            for end in raw_edge.ends:
                if end not in vertices:
                    raise FileFormatError(f"unknown vertex {end!r}", location=f"edges.{index}.ends")
        edge_ids = {raw_edge.id for raw_edge in document.edges}
        return PlanarDiagram(
            vertices=tuple(document.vertices),
            edges=tuple(
                DiagramEdge(id=raw_edge.id, tail=raw_edge.ends[0], head=raw_edge.ends[1], letter=raw_edge.letter)
                for raw_edge in document.edges
            ),
            regions=tuple(
                Region(
                    id=raw_region.id,
                    boundary=_darts(f"regions.{index}.boundary", raw_region.boundary, edge_ids),
                    marker=raw_region.marker,
                )
                for index, raw_region in enumerate(document.regions)
            ),
            boundary=_darts("boundary", document.boundary, edge_ids),
        )

    @staticmethod
    def to_document(d: PlanarDiagram) -> DiagramDocument:
        return DiagramDocument(
            vertices=list(d.vertices),
            edges=[
                DiagramEdgeDocument(id=edge.id, ends=(edge.tail, edge.head), letter=edge.letter)
                for edge in d.edges
            ],
            regions=[
                RegionDocument(id=region.id, boundary=_refs(region.boundary), marker=region.marker)
                for region in d.regions
            ],
            boundary=_refs(d.boundary),
        )
