import argparse

from recurrent_workbench.cli.commands.presentations.schema import (
    ConditionDTO,
    CornerSubwordsDTO,
    PiecesDTO,
    SmallCancellationDTO,
)
from recurrent_workbench.cli.dependencies import MAX_AREA, PRESENTATION, make_report, presentation_repository
from recurrent_workbench.cli.routing import CommandRouter, argument
from recurrent_workbench.models.reports import RunReport
from recurrent_workbench.services.diagram_search import corner_subwords
from recurrent_workbench.services.small_cancellation import (
    PIECE_MODES,
    check_small_cancellation,
    compute_pieces,
)
from recurrent_workbench.services.words import format_word, parse_word

router = CommandRouter()

MODE = argument("--mode", choices=PIECE_MODES, default="standard", help="piece notion")


@router.command("pieces", "Piece table of a presentation.", PRESENTATION, MODE)
def pieces(namespace: argparse.Namespace) -> RunReport:
    presentation = presentation_repository.load(namespace.path)
    table = compute_pieces(presentation, namespace.mode)
    verdicts = PiecesDTO(
        mode=table.mode,
        pieces=sorted(format_word(piece) for piece in table.pieces),
        max_length=table.max_length,
        relators={
            format_word(relator): list(longest)
            for relator, longest in zip(presentation.relators, table.max_pieces)
        },
    )
    return make_report(namespace, True, verdicts, inputs=[namespace.path])


@router.command(
    "sc-check",
    "Check small cancellation conditions of a presentation.",
    PRESENTATION,
    argument(
        "--condition",
        action="append",
        default=None,
        help="C(n), T(n) or B6; repeat for several, C(6) by default",
    ),
    MODE,
)
def sc_check(namespace: argparse.Namespace) -> RunReport:
    presentation = presentation_repository.load(namespace.path)
    verdicts = [
        check_small_cancellation(presentation, which, namespace.mode)
        for which in namespace.condition or ["C(6)"]
    ]
    report = SmallCancellationDTO(
        mode=namespace.mode,
        conditions=[
            ConditionDTO(condition=verdict.condition, holds=verdict.holds, witness=verdict.witness)
            for verdict in verdicts
        ],
    )
    return make_report(namespace, all(verdict.holds for verdict in verdicts), report, inputs=[namespace.path])


@router.command(
    "corner-subwords",
    "Find two relator halves on the boundary of a dihedral Artin diagram.",
    argument("word", help="cyclically reduced word over a, b; upper case letters are inverses"),
    argument("-m", "--label", type=int, required=True, help="dihedral label m >= 3"),
    MAX_AREA,
)
def corner(namespace: argparse.Namespace) -> RunReport:
    word = parse_word(namespace.word)
    found = corner_subwords(word, namespace.label, namespace.max_area)
    if found is None:
        return make_report(namespace, False, CornerSubwordsDTO(word=format_word(word), found=False))
    verdicts = CornerSubwordsDTO(
        word=format_word(word),
        found=True,
        first=found.first[0],
        first_position=found.first[1],
        second=found.second[0],
        second_position=found.second[1],
        overlapping=found.overlapping,
        area=found.area,
    )
    return make_report(namespace, not found.overlapping, verdicts)
