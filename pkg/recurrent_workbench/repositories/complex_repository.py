from pathlib import Path

from recurrent_workbench.exceptions import ScalarParseError
from recurrent_workbench.models.complex import ComplexSpec, Edge, EdgeRef, Face
from recurrent_workbench.repositories.files import (
    dump_document,
    parse_document,
    read_document,
    write_document,
)
from recurrent_workbench.repositories.schema import (
    ComplexDocument,
    EdgeDocument,
    FaceDocument,
)
from recurrent_workbench.services.complexes import validate_complex
from recurrent_workbench.services.quadratic import ONE, format_scalar, parse_scalar


class ComplexRepository:
    """Class for reading and writing complex files (.cx)."""

    def load(self, path: Path) -> ComplexSpec:
        """
        Read and validate a complex file.

        :param path: file path.
        :return: validated complex.
        """
        return self.from_document(read_document(path, ComplexDocument))

    def loads(self, text: str) -> ComplexSpec:
        return self.from_document(parse_document(text, ComplexDocument))

    def dumps(self, c: ComplexSpec) -> str:
        return dump_document(self.to_document(c))

    def save(self, c: ComplexSpec, path: Path) -> Path:
        return write_document(path, self.to_document(c))

    @staticmethod
    def from_document(document: ComplexDocument) -> ComplexSpec:
        """
        Complex from its DTO.

        Lengths that do not parse are reported with the structural
        violations and read as 1 meanwhile.

        :param document: DTO.
        :raises ComplexValidationError: listing every violation with its location.
        :return: validated complex.
        """
        violations: list[tuple[str, str]] = []
        edges = []
        for index, raw_edge in enumerate(document.edges):
            try:
                length = parse_scalar(raw_edge.length)
            except ScalarParseError as exc:
                violations.append((f"edges.{index}.length", exc.detail))
                length = ONE
            edges.append(Edge(id=raw_edge.id, tail=raw_edge.ends[0], head=raw_edge.ends[1], length=length))
        faces = tuple(
            Face(
                id=raw_face.id,
                boundary=tuple(EdgeRef(edge=name, forward=sign == "+") for name, sign in raw_face.boundary),
                shape=raw_face.shape,
                sides=None if raw_face.sides is None else tuple(raw_face.sides),
            )
            for raw_face in document.faces
        )
        unchecked = ComplexSpec(vertices=tuple(document.vertices), edges=tuple(edges), faces=faces)
        return validate_complex(unchecked, violations)

    @staticmethod
    def to_document(c: ComplexSpec) -> ComplexDocument:
        return ComplexDocument(
            vertices=list(c.vertices),
            edges=[
                EdgeDocument(id=edge.id, ends=(edge.tail, edge.head), length=format_scalar(edge.length))
                for edge in c.edges
            ],
            faces=[
                FaceDocument(
                    id=face.id,
                    boundary=[(ref.edge, ref.sign) for ref in face.boundary],
                    shape=face.shape,
                    sides=None if face.sides is None else list(face.sides),
                )
                for face in c.faces
            ],
        )
