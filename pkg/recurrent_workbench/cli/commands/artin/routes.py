import argparse
from typing import Optional

from recurrent_workbench.cli.commands.artin.schema import (
    BallDTO,
    BlockDTO,
    BlocksDTO,
    ExampleDTO,
    FlagsDTO,
    HypergraphDTO,
    PresentationDTO,
    ProbeDTO,
    WallDTO,
    WallProbeDTO,
    WordDTO,
)
from recurrent_workbench.cli.dependencies import (
    CAP,
    DOT,
    GRAPH,
    OUT,
    RADIUS,
    complex_repository,
    diagram_repository,
    make_report,
    presentation_repository,
    write_text,
)
from recurrent_workbench.cli.routing import CommandRouter, argument
from recurrent_workbench.exceptions import PresentationError
from recurrent_workbench.models.artin import CayleyBall, Hypergraph, HypergraphProjection, LabeledGraph, Target
from recurrent_workbench.models.reports import RunReport
from recurrent_workbench.services.artin import (
    BALL_CAVEAT,
    artin_normal_form,
    artin_word,
    block_factorization,
    build_cayley_ball,
    classify_graph,
    coxeter_normal_form,
    example_a2_diagram,
    example_a2_presentation,
    probe_ball,
    project_hypergraph,
    standard_presentation,
)
from recurrent_workbench.services.diagrams import boundary_word, diagram_to_complex, region_label, validate_diagram
from recurrent_workbench.services.export import hypergraphs_to_dot
from recurrent_workbench.services.hypergraphs import TRUNCATION_NOTE, trace_all_hypergraphs
from recurrent_workbench.services.words import format_word, parse_word

router = CommandRouter(prefix="artin", summary="Artin and Coxeter groups of labeled graphs.")

TARGET = argument("--target", type=Target, choices=list(Target), default=Target.ARTIN)
WORD = argument("word", help="word over the generators; upper case letters are inverses")


def _wall(wall: Hypergraph, projection: Optional[HypergraphProjection] = None) -> WallDTO:
    return WallDTO(
        component=wall.component,
        edges=len(wall.edges),
        faces=len(wall.faces),
        forest=wall.forest,
        embedded=wall.embedded,
        cycle=list(wall.cycle),
        complement_components=wall.complement_components,
        projection_consistent=None if projection is None else projection.consistent,
    )


def _ball(namespace: argparse.Namespace, g: LabeledGraph, target: Target) -> CayleyBall:
    return build_cayley_ball(g, target, namespace.radius, namespace.cap)


@router.command("present", "Standard presentation of a labeled graph.", GRAPH, TARGET, OUT)
def present(namespace: argparse.Namespace) -> RunReport:
    g = presentation_repository.load_graph(namespace.path)
    presentation = standard_presentation(g, namespace.target)
    artifacts = []
    if namespace.out is not None:
        artifacts.append(presentation_repository.save(presentation, namespace.out))
    verdicts = PresentationDTO(
        target=namespace.target.value,
        generators=list(presentation.generators),
        relators=[format_word(relator) for relator in presentation.relators],
    )
    return make_report(namespace, True, verdicts, inputs=[namespace.path], artifacts=artifacts)


@router.command("classify", "Extra-large, two-dimensional and forbidden-configuration flags.", GRAPH)
def classify(namespace: argparse.Namespace) -> RunReport:
    g = presentation_repository.load_graph(namespace.path)
    flags = classify_graph(g)
    verdicts = FlagsDTO(
        extra_large=flags.extra_large,
        triangle_with_two=flags.triangle_with_two,
        two_dimensional=flags.two_dimensional,
        square_with_three_twos=flags.square_with_three_twos,
        triangles=[list(triangle) for triangle in flags.triangles],
    )
    return make_report(namespace, True, verdicts, inputs=[namespace.path])


@router.command("word", "Decide whether a word is trivial.", GRAPH, WORD, TARGET)
def word_problem(namespace: argparse.Namespace) -> RunReport:
    g = presentation_repository.load_graph(namespace.path)
    word = parse_word(namespace.word)
    if namespace.target == Target.COXETER:
        normal_form = coxeter_normal_form(word, g)
        verdicts = WordDTO(
            word=format_word(word),
            target=namespace.target.value,
            trivial=not normal_form,
            normal_form=format_word(normal_form),
        )
        return make_report(namespace, True, verdicts, inputs=[namespace.path])
    if len(g.edges) != 1:
        raise PresentationError("the Artin word problem is solved for a single-edge graph only")
    first, second, label = g.edges[0]
    power, tail = artin_normal_form(word, label, (first, second))
    verdicts = WordDTO(
        word=format_word(word),
        target=namespace.target.value,
        trivial=power == 0 and not tail,
        normal_form=format_word(artin_word(power, tail, label, (first, second))),
        delta_power=power,
    )
    return make_report(namespace, True, verdicts, inputs=[namespace.path])


@router.command("ball", "Ball of the Cayley complex around the identity.", GRAPH, TARGET, RADIUS, CAP, OUT, DOT)
def ball(namespace: argparse.Namespace) -> RunReport:
    g = presentation_repository.load_graph(namespace.path)
    found = _ball(namespace, g, namespace.target)
    c = found.complex_spec
    walls = trace_all_hypergraphs(c)
    artifacts = []
    if namespace.out is not None:
        artifacts.append(complex_repository.save(c, namespace.out))
    if namespace.dot is not None:
        artifacts.append(write_text(namespace.dot, hypergraphs_to_dot(walls)))
    verdicts = BallDTO(
        target=namespace.target.value,
        radius=namespace.radius,
        vertices=len(c.vertices),
        edges=len(c.edges),
        faces=len(c.faces),
        walls=len(walls),
        forests=all(wall.forest for wall in walls),
        caveat=TRUNCATION_NOTE,
    )
    return make_report(namespace, True, verdicts, inputs=[namespace.path], artifacts=artifacts)


@router.command(
    "hypergraph",
    "Trace every hypergraph of a Cayley ball.",
    GRAPH,
    TARGET,
    RADIUS,
    CAP,
    argument("--project", action="store_true", help="map Artin walls into the Coxeter ball of the same radius"),
    DOT,
)
def hypergraph(namespace: argparse.Namespace) -> RunReport:
    g = presentation_repository.load_graph(namespace.path)
    found = _ball(namespace, g, namespace.target)
    walls = trace_all_hypergraphs(found.complex_spec)
    projections: list[Optional[HypergraphProjection]] = [None] * len(walls)
    if namespace.project and namespace.target == Target.ARTIN:
        coxeter = _ball(namespace, g, Target.COXETER)
        projections = [project_hypergraph(found, coxeter, wall) for wall in walls]
    artifacts = []
    if namespace.dot is not None:
        artifacts.append(write_text(namespace.dot, hypergraphs_to_dot(walls)))
    verdicts = HypergraphDTO(
        target=namespace.target.value,
        radius=namespace.radius,
        walls=[_wall(wall, projection) for wall, projection in zip(walls, projections)],
        caveat=TRUNCATION_NOTE,
    )
    passed = all(wall.forest for wall in walls) and all(
        projection.consistent for projection in projections if projection is not None
    )
    return make_report(namespace, passed, verdicts, inputs=[namespace.path], artifacts=artifacts)


@router.command(
    "example-a2",
    "Reduced 12-region diagram over the a, b, c triangle with labels 2.",
    argument("--trace", action="store_true", help="trace its hypergraphs; a cycle fails the run"),
    OUT,
    DOT,
)
def example_a2(namespace: argparse.Namespace) -> RunReport:
    d = example_a2_diagram()
    verdict = validate_diagram(d, example_a2_presentation())
    walls = trace_all_hypergraphs(diagram_to_complex(d)) if namespace.trace else []
    artifacts = []
    if namespace.out is not None:
        artifacts.append(diagram_repository.save(d, namespace.out))
    if namespace.dot is not None and walls:
        artifacts.append(write_text(namespace.dot, hypergraphs_to_dot(walls, "example_a2")))
    verdicts = ExampleDTO(
        regions=len(d.regions),
        boundary_word=format_word(boundary_word(d)),
        central_labels=[format_word(region_label(d, region)) for region in d.regions if region.marker == "r0"],
        valid=verdict.valid,
        reduced=verdict.reduced,
        walls=[_wall(wall) for wall in walls],
    )
    passed = verdict.valid and verdict.reduced and all(wall.forest for wall in walls)
    return make_report(namespace, passed, verdicts, artifacts=artifacts)


@router.command("blocks", "Factor a word into dihedral blocks.", GRAPH, WORD)
def blocks(namespace: argparse.Namespace) -> RunReport:
    g = presentation_repository.load_graph(namespace.path)
    word = parse_word(namespace.word)
    runs = block_factorization(word, g)
    verdicts = BlocksDTO(
        word=format_word(word),
        blocks=[
            BlockDTO(
                word=format_word(run.word),
                generators=list(run.generators),
                label=run.label,
                syllables=[f"{generator}^{power}" for generator, power in run.syllables],
                form=run.form,
                projection=run.projection,
            )
            for run in runs
        ],
    )
    return make_report(namespace, True, verdicts, inputs=[namespace.path])


@router.command(
    "wall-probe",
    "Probe every adjacent face pair of a Coxeter ball for a disjoint or equal wall.",
    GRAPH,
    RADIUS,
    CAP,
)
def wall_probe(namespace: argparse.Namespace) -> RunReport:
    g = presentation_repository.load_graph(namespace.path)
    results = probe_ball(_ball(namespace, g, Target.COXETER))
    failures = [
        ProbeDTO(
            sigma=result.sigma,
            tau=result.tau,
            shared_edge=result.shared_edge,
            wall_sigma=result.wall_sigma,
            found=None,
            rule=result.rule,
            candidates=[f"{edge}: {reason}" for edge, reason in result.candidates],
        )
        for result in results
        if result.found is None
    ]
    verdicts = WallProbeDTO(radius=namespace.radius, probes=len(results), failures=failures, caveat=BALL_CAVEAT)
    return make_report(namespace, not failures, verdicts, inputs=[namespace.path])
