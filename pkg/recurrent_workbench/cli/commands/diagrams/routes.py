import argparse
from pathlib import Path

from recurrent_workbench.cli.commands.diagrams.schema import (
    DiagramValidityDTO,
    ExportDTO,
    SearchDTO,
    StripsDTO,
)
from recurrent_workbench.cli.dependencies import (
    DIAGRAM,
    DOT,
    MAX_AREA,
    OUT,
    complex_repository,
    diagram_repository,
    make_report,
    parse_darts,
    presentation_repository,
    write_text,
)
from recurrent_workbench.cli.routing import CommandRouter, argument
from recurrent_workbench.exceptions import InputError
from recurrent_workbench.models.diagram import PlanarDiagram
from recurrent_workbench.models.reports import RunReport
from recurrent_workbench.services.diagram_search import search_disc_diagram, search_disc_diagram_in_complex
from recurrent_workbench.services.diagrams import boundary_word, find_strips, region_label, validate_diagram
from recurrent_workbench.services.export import diagram_dual_to_dot
from recurrent_workbench.services.words import format_word, parse_word

router = CommandRouter(prefix="diagram", summary="Validate, analyze, search and export disc diagrams.")


def _labels(d: PlanarDiagram) -> dict[str, str]:
    return {region.id: format_word(region_label(d, region)) for region in d.regions}


def _artifacts(namespace: argparse.Namespace, d: PlanarDiagram) -> list[Path]:
    artifacts = []
    if getattr(namespace, "out", None) is not None:
        artifacts.append(diagram_repository.save(d, namespace.out))
    if getattr(namespace, "dot", None) is not None:
        artifacts.append(write_text(namespace.dot, diagram_dual_to_dot(d)))
    return artifacts


@router.command(
    "validate",
    "Check planarity data, relator labels and reducedness of a diagram.",
    DIAGRAM,
    argument("--presentation", type=Path, default=None, help="presentation whose relators label the regions"),
)
def validate(namespace: argparse.Namespace) -> RunReport:
    d = diagram_repository.load(namespace.path)
    inputs = [namespace.path]
    presentation = None
    if namespace.presentation is not None:
        presentation = presentation_repository.load(namespace.presentation)
        inputs.append(namespace.presentation)
    verdict = validate_diagram(d, presentation)
    verdicts = DiagramValidityDTO(
        regions=len(d.regions),
        boundary_word=format_word(boundary_word(d)),
        region_labels=_labels(d),
        violations=[f"{location}: {message}" for location, message in verdict.violations],
        mirror_edges=list(verdict.mirror_edges),
        valid=verdict.valid,
        reduced=verdict.reduced,
    )
    return make_report(namespace, verdict.valid and verdict.reduced, verdicts, inputs=inputs)


@router.command("strips", "Spikes, interior degrees and strips of a C(4)-T(4) diagram.", DIAGRAM)
def strips(namespace: argparse.Namespace) -> RunReport:
    d = diagram_repository.load(namespace.path)
    report = find_strips(d)
    verdicts = StripsDTO(
        spikes=list(report.spikes),
        interior_degrees=report.interior_degrees,
        simple_boundary_regions=list(report.simple_boundary_regions),
        singleton_strips=list(report.singleton_strips),
        compound_strips=[list(strip) for strip in report.compound_strips],
        c4=report.c4,
        t4=report.t4,
        case=report.case,
        notes=list(report.notes),
    )
    return make_report(namespace, report.case is not None, verdicts, inputs=[namespace.path])


@router.command(
    "search",
    "Least-area disc diagram for a word or for a closed path in a complex.",
    argument("--word", default=None, help="boundary word, with --presentation"),
    argument("--presentation", type=Path, default=None),
    argument("--complex", type=Path, default=None, help="complex file, with --path"),
    argument("--path", default=None, help="closed edge path such as 'e0+ e1+ e2-'"),
    MAX_AREA,
    OUT,
    DOT,
)
def search(namespace: argparse.Namespace) -> RunReport:
    if namespace.word is not None and namespace.presentation is not None:
        presentation = presentation_repository.load(namespace.presentation)
        word = parse_word(namespace.word)
        result = search_disc_diagram(word, presentation, namespace.max_area)
        inputs = [namespace.presentation]
        boundary = format_word(word)
    elif namespace.complex is not None and namespace.path is not None:
        c = complex_repository.load(namespace.complex)
        path = parse_darts(namespace.path)
        result = search_disc_diagram_in_complex(c, path, namespace.max_area)
        inputs = [namespace.complex]
        boundary = " ".join(f"{ref.edge}{ref.sign}" for ref in path)
    else:
        raise InputError("give --word with --presentation, or --complex with --path")
    artifacts = [] if result.diagram is None else _artifacts(namespace, result.diagram)
    verdicts = SearchDTO(
        boundary=boundary,
        found=result.diagram is not None,
        area=result.area,
        explored_states=result.explored_states,
        exhausted=result.exhausted,
        collar=result.collar,
        region_labels={} if result.diagram is None else _labels(result.diagram),
    )
    return make_report(namespace, result.diagram is not None, verdicts, inputs=inputs, artifacts=artifacts)


@router.command(
    "export",
    "Write the dual graph of a diagram in DOT.",
    DIAGRAM,
    argument("--dot", type=Path, required=True, help="DOT output file"),
)
def export(namespace: argparse.Namespace) -> RunReport:
    d = diagram_repository.load(namespace.path)
    artifacts = [write_text(namespace.dot, diagram_dual_to_dot(d))]
    verdicts = ExportDTO(regions=len(d.regions), edges=len(d.edges))
    return make_report(namespace, True, verdicts, inputs=[namespace.path], artifacts=artifacts)
