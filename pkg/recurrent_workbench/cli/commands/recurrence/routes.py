import argparse

from recurrent_workbench.cli.commands.recurrence.schema import ConditionDTO, MarkovDTO, RecurrenceDTO
from recurrent_workbench.cli.dependencies import (
    COMPLEX,
    DOT,
    OUT,
    certificate_repository,
    complex_repository,
    make_report,
    write_text,
)
from recurrent_workbench.cli.routing import CommandRouter, argument
from recurrent_workbench.models.reports import RunReport
from recurrent_workbench.services.complexes import max_scalar_bits
from recurrent_workbench.services.export import digraph_to_dot
from recurrent_workbench.services.recurrence import build_markov, check_recurrence, check_stationary_uniform

router = CommandRouter()


@router.command(
    "recurrence",
    "Check the recurrence conditions of a shaped complex.",
    COMPLEX,
    argument(
        "--assert-simply-connected",
        action="store_true",
        help="assert that the complex is simply connected; gates the verdict on condition (v)",
    ),
    DOT,
)
def recurrence(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    report = check_recurrence(c, simply_connected=namespace.assert_simply_connected)
    artifacts = []
    if namespace.dot is not None:
        artifacts.append(write_text(namespace.dot, digraph_to_dot(build_markov(c))))
    verdicts = RecurrenceDTO(
        token_count=report.token_count,
        face_counts=report.face_counts,
        conditions=[
            ConditionDTO(
                name=condition.name,
                passed=condition.passed,
                detail=condition.detail,
                offenders=list(condition.offenders),
            )
            for condition in report.conditions
        ],
        acyclic=report.acyclic,
        returns_to_involution=report.returns_to_involution,
        b0=report.b0,
        b1=report.b1,
        simply_connected_asserted=report.simply_connected_asserted,
        warnings=list(report.warnings),
    )
    return make_report(
        namespace,
        report.passed,
        verdicts,
        inputs=[namespace.path],
        artifacts=artifacts,
        bits=max_scalar_bits(c),
    )


@router.command("markov", "Build the transition digraph and check its stationary measure.", COMPLEX, DOT, OUT)
def markov(namespace: argparse.Namespace) -> RunReport:
    c = complex_repository.load(namespace.path)
    digraph = build_markov(c)
    stationary, witness = check_stationary_uniform(digraph)
    artifacts = []
    if namespace.dot is not None:
        artifacts.append(write_text(namespace.dot, digraph_to_dot(digraph)))
    if namespace.out is not None:
        artifacts.append(certificate_repository.save_digraph(digraph, namespace.out))
    labels = [token.label() for token in digraph.nodes]
    verdicts = MarkovDTO(
        nodes=len(digraph.nodes),
        arcs=len(digraph.arcs),
        dead_ends=[labels[position] for position in digraph.dead_ends],
        stationary=stationary,
        witness=None if witness is None else witness.label(),
        row_sums={label: str(total) for label, total in zip(labels, digraph.row_sums)},
        column_sums={label: str(total) for label, total in zip(labels, digraph.column_sums)},
    )
    return make_report(
        namespace,
        stationary,
        verdicts,
        inputs=[namespace.path],
        artifacts=artifacts,
        bits=max_scalar_bits(c),
    )
