import argparse

from recurrent_workbench.cli.commands.shapes.schema import (
    AnchorDTO,
    BilliardDTO,
    CatalogDTO,
    SegmentDTO,
)
from recurrent_workbench.cli.dependencies import make_report
from recurrent_workbench.cli.routing import CommandRouter, argument
from recurrent_workbench.exceptions import InputError, UnknownElementError
from recurrent_workbench.models.reports import RunReport
from recurrent_workbench.models.shapes import ChordSegment, DirectionAnchor, ShapeTemplate
from recurrent_workbench.services.planar import format_vec
from recurrent_workbench.services.quadratic import format_scalar, max_bit_size
from recurrent_workbench.services.shapes import (
    billiard_trace,
    catalog,
    chord,
    chord_closed,
    perpendicular_sides,
    symmetry_closed,
)
from recurrent_workbench.settings import settings

router = CommandRouter(prefix="shapes", summary="Inspect the shape catalog.")

NAME = argument("name", help="TriQ244, TriH236, Equilateral, UnitSquare or Gon(2n)")
ANCHOR = argument("--anchor", type=int, default=0, help="anchor index in the catalog listing")


def _anchor(shape: ShapeTemplate, anchor: DirectionAnchor) -> AnchorDTO:
    index = shape.anchors.index(anchor) if anchor in shape.anchor_set else -1
    return AnchorDTO(index=index, side=anchor.side, t=format_scalar(anchor.t), direction=format_vec(anchor.direction))


def _segment(shape: ShapeTemplate, segment: ChordSegment) -> SegmentDTO:
    return SegmentDTO(
        start=_anchor(shape, segment.start),
        end=_anchor(shape, segment.end),
        length=format_scalar(segment.length),
    )


def _pick(shape: ShapeTemplate, index: int) -> DirectionAnchor:
    if not 0 <= index < len(shape.anchors):
        raise UnknownElementError(f"{shape.name} has no anchor {index}")
    return shape.anchors[index]


@router.command("catalog", "List a template with its anchors and closure checks.", NAME)
def show_catalog(namespace: argparse.Namespace) -> RunReport:
    shape = catalog.resolve(namespace.name)
    closed = chord_closed(shape)
    symmetric = symmetry_closed(shape)
    verdicts = CatalogDTO(
        name=shape.name,
        vertices=[format_vec(vertex) for vertex in shape.vertices],
        lengths=[format_scalar(length) for length in shape.lengths],
        anchors=[_anchor(shape, anchor) for anchor in shape.anchors],
        chord_closed=closed,
        symmetry_closed=symmetric,
        perpendicular_sides=sorted(perpendicular_sides(shape)),
    )
    bits = max_bit_size(coordinate for vertex in shape.vertices for coordinate in vertex)
    return make_report(namespace, closed and symmetric, verdicts, bits=bits)


@router.command("chord", "Chord of one anchor.", NAME, ANCHOR)
def show_chord(namespace: argparse.Namespace) -> RunReport:
    shape = catalog.resolve(namespace.name)
    segment = chord(shape, _pick(shape, namespace.anchor))
    verdicts = _segment(shape, segment)
    return make_report(namespace, segment.end in shape.anchor_set, verdicts, bits=segment.length.bit_size())


@router.command(
    "billiard",
    "Billiard trajectory of one anchor.",
    NAME,
    ANCHOR,
    argument("--max-bounces", type=int, default=settings.max_bounces),
)
def show_billiard(namespace: argparse.Namespace) -> RunReport:
    if namespace.max_bounces < 1:
        raise InputError("--max-bounces must be at least 1")
    shape = catalog.resolve(namespace.name)
    trace = billiard_trace(shape, _pick(shape, namespace.anchor), namespace.max_bounces)
    verdicts = BilliardDTO(
        closed=trace.closed,
        period=trace.period,
        segments=[_segment(shape, segment) for segment in trace.segments],
    )
    return make_report(namespace, trace.closed, verdicts)
