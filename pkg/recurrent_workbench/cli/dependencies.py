"""Inputs, shared arguments and report assembly for command handlers."""
import argparse
import logging
from pathlib import Path
from typing import Iterable, Sequence

from pydantic import BaseModel

from recurrent_workbench.cli.routing import argument
from recurrent_workbench.exceptions import UnknownElementError
from recurrent_workbench.models.complex import EdgeRef
from recurrent_workbench.models.reports import RunReport, input_digest
from recurrent_workbench.repositories.certificate_repository import CertificateRepository
from recurrent_workbench.repositories.complex_repository import ComplexRepository
from recurrent_workbench.repositories.diagram_repository import DiagramRepository
from recurrent_workbench.repositories.presentation_repository import PresentationRepository
from recurrent_workbench.settings import settings

logger = logging.getLogger(__name__)

complex_repository = ComplexRepository()
diagram_repository = DiagramRepository()
presentation_repository = PresentationRepository()
certificate_repository = CertificateRepository()

COMPLEX = argument("path", type=Path, help="complex file (.cx)")
DIAGRAM = argument("path", type=Path, help="diagram file (.dg)")
GRAPH = argument("path", type=Path, help="labeled graph file (.lg)")
PRESENTATION = argument("path", type=Path, help="presentation file (.pr)")
OUT = argument("--out", type=Path, default=None, help="write the resulting file here")
DOT = argument("--dot", type=Path, default=None, help="write a Graphviz rendering here")
MAX_AREA = argument("--max-area", type=int, default=settings.max_area, help="largest diagram area explored")
RADIUS = argument("--radius", type=int, default=settings.ball_radius, help="Cayley ball radius")
CAP = argument("--cap", type=int, default=settings.element_cap, help="Cayley ball element cap")


def parse_darts(text: str) -> tuple[EdgeRef, ...]:
    """
    Darts written as ``e0+ e1-``; commas count as blanks.

    :param text: dart list.
    :raises UnknownElementError: for a dart without its sign.
    :return: darts.
    """
    darts = []
    for token in text.replace(",", " ").split():
        if len(token) < 2 or token[-1] not in "+-":
            raise UnknownElementError(f"dart {token!r} must be an edge id followed by + or -")
        darts.append(EdgeRef(token[:-1], token.endswith("+")))
    return tuple(darts)


def write_text(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)
    return path


def make_report(
    namespace: argparse.Namespace,
    passed: bool,
    verdicts: BaseModel,
    inputs: Sequence[Path] = (),
    artifacts: Iterable[Path] = (),
    bits: int = 0,
) -> RunReport:
    """
    Report of a finished command.

    :param namespace: parsed arguments of the command.
    :param passed: verdict flag.
    :param verdicts: verdict DTO of the command.
    :param inputs: input files hashed into the digest.
    :param artifacts: files written.
    :param bits: largest coefficient bit size met.
    :return: report.
    """
    return RunReport(
        command=namespace.command_name,
        passed=passed,
        verdicts=verdicts.model_dump(mode="json"),
        input_digest=input_digest(inputs) if inputs else "",
        artifacts=tuple(str(path) for path in artifacts),
        max_bit_size=bits,
    )
