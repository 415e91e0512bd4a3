from pathlib import Path

from recurrent_workbench.models.artin import LabeledGraph
from recurrent_workbench.models.diagram import Presentation
from recurrent_workbench.repositories.files import dump_document, read_document, write_document
from recurrent_workbench.repositories.schema import LabeledGraphDocument, PresentationDocument
from recurrent_workbench.services.artin import labeled_graph
from recurrent_workbench.services.words import build_presentation, format_word, parse_word


class PresentationRepository:
    """Class for reading and writing presentations (.pr) and labeled graphs (.lg)."""

    def load(self, path: Path) -> Presentation:
        document = read_document(path, PresentationDocument)
        return build_presentation(document.generators, [parse_word(text) for text in document.relators])

    def dumps(self, p: Presentation) -> str:
        return dump_document(self.to_document(p))

    def save(self, p: Presentation, path: Path) -> Path:
        return write_document(path, self.to_document(p))

    def load_graph(self, path: Path) -> LabeledGraph:
        document = read_document(path, LabeledGraphDocument)
        return labeled_graph(document.vertices, document.edges)

    def save_graph(self, g: LabeledGraph, path: Path) -> Path:
        document = LabeledGraphDocument(vertices=list(g.vertices), edges=list(g.edges))
        return write_document(path, document)

    @staticmethod
    def to_document(p: Presentation) -> PresentationDocument:
        return PresentationDocument(
            generators=list(p.generators),
            relators=[format_word(relator) for relator in p.relators],
        )
