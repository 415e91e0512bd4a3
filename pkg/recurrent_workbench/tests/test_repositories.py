"""Reading and writing the file formats."""
from pathlib import Path
from typing import Callable

import pytest
import ujson

from recurrent_workbench.exceptions import FileFormatError, ScalarParseError
from recurrent_workbench.models.complex import ComplexSpec
from recurrent_workbench.models.diagram import PlanarDiagram, Presentation
from recurrent_workbench.repositories.certificate_repository import CertificateRepository
from recurrent_workbench.repositories.complex_repository import ComplexRepository
from recurrent_workbench.repositories.diagram_repository import DiagramRepository
from recurrent_workbench.repositories.presentation_repository import PresentationRepository
from recurrent_workbench.services.certifier import build_dumbbell
from recurrent_workbench.services.recurrence import build_markov


def test_complex_round_trip(load_complex: Callable[[str], ComplexSpec], tmp_path: Path) -> None:
    """Tests that a saved complex loads back unchanged."""
    repository = ComplexRepository()
    book = load_complex("pillow-book")
    path = repository.save(book, tmp_path / "out" / "book.cx")
    assert repository.load(path) == book
    assert repository.dumps(book) == path.read_text(encoding="utf-8")
    assert repository.dumps(book).endswith("}\n")


def test_diagram_round_trip(load_diagram: Callable[[str], PlanarDiagram]) -> None:
    """Tests diagrams with markers through text."""
    repository = DiagramRepository()
    buried = load_diagram("buried")
    assert repository.loads(repository.dumps(buried)) == buried


def test_presentation_files(
    load_presentation: Callable[[str], Presentation],
    fixtures_dir: Path,
    tmp_path: Path,
) -> None:
    """Tests presentations and labeled graphs on disk."""
    repository = PresentationRepository()
    presentation = load_presentation("buried")
    assert len(presentation.relators) == 2
    assert repository.load(repository.save(presentation, tmp_path / "p.pr")) == presentation
    graph = repository.load_graph(fixtures_dir / "triangle233.lg")
    assert graph.label("c", "b") == 3
    assert repository.load_graph(repository.save_graph(graph, tmp_path / "g.lg")).labels == graph.labels


def test_certificate_round_trip(load_complex: Callable[[str], ComplexSpec], tmp_path: Path) -> None:
    """Tests that certificates keep their exact scalars."""
    repository = CertificateRepository()
    cert = build_dumbbell(load_complex("three-page"))
    assert repository.load(repository.save(cert, tmp_path / "book.cert")) == cert


def test_digraph_dump(load_complex: Callable[[str], ComplexSpec], tmp_path: Path) -> None:
    """Tests the transition digraph dump."""
    digraph = build_markov(load_complex("three-page"))
    path = CertificateRepository().save_digraph(digraph, tmp_path / "markov.json")
    text = path.read_text(encoding="utf-8")
    assert '"1/2"' in text
    assert text.count('"source"') == len(digraph.arcs)


@pytest.mark.parametrize(
    "text, location",
    [
        ('{"edges": []}', "vertices"),
        ('{"vertices": [], "colour": "red"}', "colour"),
        ('{"vertices": ["a"], "edges": [{"id": "e", "ends": 5}]}', "edges.0.ends"),
        (
            '{"vertices": ["a"], "edges": [{"id": "e", "ends": ["a", "a"]}],'
            ' "faces": [{"id": "f", "boundary": [["e", "*"]]}]}',
            "faces.0.boundary.0.1",
        ),
    ],
)
def test_schema_errors(text: str, location: str) -> None:
    """Tests that DTO mismatches carry their dotted location."""
    with pytest.raises(FileFormatError) as error:
        ComplexRepository().loads(text)
    assert error.value.location == location


def test_malformed_json() -> None:
    """Tests the malformed JSON error."""
    with pytest.raises(FileFormatError, match="malformed JSON"):
        ComplexRepository().loads("{")


def test_missing_file(tmp_path: Path) -> None:
    """Tests the unreadable file error."""
    with pytest.raises(FileFormatError, match="cannot read"):
        ComplexRepository().load(tmp_path / "absent.cx")


def test_unknown_diagram_vertex() -> None:
    """Tests that diagram edges may only join declared vertices."""
    text = '{"vertices": ["a"], "edges": [{"id": "e", "ends": ["a", "b"], "letter": "a"}]}'
    with pytest.raises(FileFormatError) as error:
        DiagramRepository().loads(text)
    assert error.value.location == "edges.0.ends"


def test_bad_certificate_scalar(load_complex: Callable[[str], ComplexSpec]) -> None:
    """Tests that certificate scalars are parsed exactly."""
    repository = CertificateRepository()
    payload = ujson.loads(repository.dumps(build_dumbbell(load_complex("three-page"))))
    payload["t"] = "one quarter"
    with pytest.raises(ScalarParseError):
        repository.loads(ujson.dumps(payload))
