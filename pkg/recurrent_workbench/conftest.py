from pathlib import Path
from typing import Callable

import pytest

from recurrent_workbench.cli.application import get_app
from recurrent_workbench.models.complex import ComplexSpec
from recurrent_workbench.models.diagram import PlanarDiagram, Presentation
from recurrent_workbench.repositories.complex_repository import ComplexRepository
from recurrent_workbench.repositories.diagram_repository import DiagramRepository
from recurrent_workbench.repositories.presentation_repository import PresentationRepository
from recurrent_workbench.settings import settings

CliRunner = Callable[..., tuple[int, str, str]]


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    """
    Directory with the sample files.

    :return: path to the fixtures.
    """
    return settings.fixtures_dir


@pytest.fixture
def load_complex(fixtures_dir: Path) -> Callable[[str], ComplexSpec]:
    """
    Loader for sample complexes.

    :param fixtures_dir: directory with the sample files.
    :return: function reading ``<name>.cx``.
    """
    repository = ComplexRepository()

    def _load(name: str) -> ComplexSpec:  # noqa: WPS430
        return repository.load(fixtures_dir / f"{name}.cx")

    return _load


@pytest.fixture
def load_diagram(fixtures_dir: Path) -> Callable[[str], PlanarDiagram]:
    """
    Loader for sample diagrams.

    :param fixtures_dir: directory with the sample files.
    :return: function reading ``<name>.dg``.
    """
    repository = DiagramRepository()

    def _load(name: str) -> PlanarDiagram:  # noqa: WPS430
        return repository.load(fixtures_dir / f"{name}.dg")

    return _load


@pytest.fixture
def load_presentation(fixtures_dir: Path) -> Callable[[str], Presentation]:
    """
    Loader for sample presentations.

    :param fixtures_dir: directory with the sample files.
    :return: function reading ``<name>.pr``.
    """
    repository = PresentationRepository()

    def _load(name: str) -> Presentation:  # noqa: WPS430
        return repository.load(fixtures_dir / f"{name}.pr")

    return _load


@pytest.fixture
def run_cli(capsys: pytest.CaptureFixture[str]) -> CliRunner:
    """
    Runs the command line application in process.

    :param capsys: output capture.
    :return: function taking arguments and returning exit code, stdout and stderr.
    """

    def _run(*argv: str) -> tuple[int, str, str]:  # noqa: WPS430
        code = get_app().run([str(arg) for arg in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
