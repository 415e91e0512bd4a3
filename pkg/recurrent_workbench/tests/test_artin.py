"""Labeled graphs, dihedral word problems, Cayley balls and walls."""
import pytest

from recurrent_workbench.exceptions import BlockError, ElementCapExceeded, PresentationError
from recurrent_workbench.models.artin import LabeledGraph, Target
from recurrent_workbench.services.artin import (
    artin_normal_form,
    artin_word,
    block_factorization,
    build_cayley_ball,
    classify_graph,
    coxeter_normal_form,
    coxeter_wall_probe,
    dihedral_word_problem,
    example_a2_diagram,
    example_a2_presentation,
    labeled_graph,
    probe_ball,
    project_hypergraph,
    standard_presentation,
    tits_coxeter_word_problem,
)
from recurrent_workbench.services.diagrams import diagram_to_complex, validate_diagram
from recurrent_workbench.services.hypergraphs import trace_all_hypergraphs
from recurrent_workbench.services.words import parse_word


def _dihedral(m: int) -> LabeledGraph:
    return labeled_graph(("a", "b"), (("a", "b", m),))


def _path(m: int) -> LabeledGraph:
    return labeled_graph(("a", "b", "c"), (("a", "b", m), ("b", "c", m)))


@pytest.mark.parametrize(
    "vertices, edges",
    [
        (("a", "B"), ()),
        (("a", "a"), ()),
        (("a", "b"), (("a", "a", 2),)),
        (("a", "b"), (("a", "b", 1),)),
        (("a", "b"), (("a", "b", 2), ("b", "a", 3))),
        (("a", "b"), (("a", "c", 2),)),
    ],
)
def test_bad_graphs(vertices: tuple[str, ...], edges: tuple[tuple[str, str, int], ...]) -> None:
    """Tests that malformed labeled graphs are rejected."""
    with pytest.raises(PresentationError):
        labeled_graph(vertices, edges)


def test_standard_presentations() -> None:
    """Tests the Artin and Coxeter relators of an edge with label 4."""
    graph = _dihedral(4)
    assert standard_presentation(graph, Target.ARTIN).relators == (parse_word("ababABAB"),)
    assert standard_presentation(graph, Target.COXETER).relators == (
        parse_word("abababab"),
        parse_word("aa"),
        parse_word("bb"),
    )
    assert example_a2_presentation().relators == (parse_word("abAB"), parse_word("acAC"), parse_word("bcBC"))


def test_graph_flags() -> None:
    """Tests the extra-large, two-dimensional and triangle flags."""
    assert classify_graph(_dihedral(4)).extra_large
    assert not classify_graph(_path(3)).extra_large
    assert classify_graph(_path(3)).two_dimensional
    for edges in ((("a", "b", 2), ("b", "c", 2), ("a", "c", 2)), (("a", "b", 2), ("b", "c", 3), ("a", "c", 3))):
        flags = classify_graph(labeled_graph(("a", "b", "c"), edges))
        assert flags.triangle_with_two
        assert not flags.two_dimensional
        assert flags.triangles == (("a", "b", "c"),)


def test_square_with_three_twos() -> None:
    """Tests the four-cycle flag."""
    edges = (("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 5))
    assert classify_graph(labeled_graph(("a", "b", "c", "d"), edges)).square_with_three_twos


@pytest.mark.parametrize(
    "word, m, expected",
    [
        ("ababABAB", 4, (0, ())),
        ("abab", 4, (1, ())),
        ("baba", 4, (1, ())),
        ("A", 4, (-1, ("b", "a", "b"))),
        ("A", 3, (-1, ("a", "b"))),
        ("aba", 3, (1, ())),
        ("bab", 3, (1, ())),
        ("ab", 3, (0, ("a", "b"))),
    ],
)
def test_artin_normal_form(word: str, m: int, expected: tuple[int, tuple[str, ...]]) -> None:
    """Tests Garside normal forms in dihedral Artin groups."""
    assert artin_normal_form(parse_word(word), m) == expected


def test_artin_word() -> None:
    """Tests that normal forms are written with the Garside element first."""
    assert artin_word(-1, ("b", "a", "b"), 4) == parse_word("BABAbab")
    assert artin_word(2, (), 3) == parse_word("abaaba")


def test_dihedral_word_problem() -> None:
    """Tests the Artin and Coxeter verdicts."""
    assert dihedral_word_problem(parse_word("ababABAB"), 4, Target.ARTIN).trivial
    verdict = dihedral_word_problem(parse_word("abab"), 4, Target.ARTIN)
    assert not verdict.trivial
    assert verdict.delta_power == 1
    assert dihedral_word_problem(parse_word("abab"), 2, Target.COXETER).trivial
    rotation = dihedral_word_problem(parse_word("ab"), 3, Target.COXETER)
    assert rotation.element is not None
    assert (rotation.element.kind, rotation.element.order) == ("rotation", 3)
    assert rotation.normal_form == ("a", "b")
    with pytest.raises(PresentationError):
        dihedral_word_problem(parse_word("ab"), 1, Target.ARTIN)
    with pytest.raises(PresentationError):
        dihedral_word_problem(parse_word("ac"), 3, Target.ARTIN)


def test_coxeter_normal_form() -> None:
    """Tests braid moves and deletions."""
    graph = _dihedral(4)
    assert coxeter_normal_form(parse_word("baba"), graph) == parse_word("abab")
    assert coxeter_normal_form(parse_word("abababab"), graph) == ()
    assert coxeter_normal_form(parse_word("AbBa"), graph) == ()
    assert tits_coxeter_word_problem(parse_word("acac"), _path(2)) is False
    with pytest.raises(PresentationError):
        coxeter_normal_form(parse_word("ad"), graph)


def test_blocks() -> None:
    """Tests the two-generator runs of a word."""
    runs = block_factorization(parse_word("abcb"), _path(2))
    assert [run.word for run in runs] == [("a", "b"), ("c", "b")]
    assert [run.label for run in runs] == [2, 2]
    assert runs[0].projection == "ab"
    assert runs[1].projection == "cb"
    assert runs[0].form == "a^k b^l"
    single = block_factorization(parse_word("a"), _path(2))
    assert (single[0].label, single[0].projection) == (None, "a")


@pytest.mark.parametrize("word", ["ac", "abd"])
def test_block_errors(word: str) -> None:
    """Tests non-adjacent pairs and unknown generators."""
    with pytest.raises(BlockError):
        block_factorization(parse_word(word), _path(2))


@pytest.mark.parametrize("radius, size", [(0, 1), (1, 5), (2, 17), (3, 53)])
def test_artin_ball_sizes(radius: int, size: int) -> None:
    """Tests that balls below half the relator length are free."""
    ball = build_cayley_ball(_dihedral(4), Target.ARTIN, radius)
    assert len(ball.complex_spec.vertices) == size
    assert ball.complex_spec.faces == ()
    assert ball.root == "1"


def test_artin_walls_are_trees() -> None:
    """Tests that octagon walls of the Artin ball are forests and project into Coxeter walls."""
    graph = _dihedral(4)
    artin = build_cayley_ball(graph, Target.ARTIN, 4)
    coxeter = build_cayley_ball(graph, Target.COXETER, 4)
    assert artin.complex_spec.faces
    assert all(face.shape == "Gon(8)" for face in artin.complex_spec.faces)
    assert len(coxeter.complex_spec.vertices) == 8
    assert len(coxeter.complex_spec.faces) == 1
    walls = trace_all_hypergraphs(artin.complex_spec)
    assert all(wall.forest for wall in walls)
    crossing = next(wall for wall in walls if wall.pairs)
    projection = project_hypergraph(artin, coxeter, crossing)
    assert projection.consistent
    assert projection.missing_edges == ()


def test_ball_errors() -> None:
    """Tests the graph, radius and cap checks."""
    with pytest.raises(PresentationError):
        build_cayley_ball(_path(2), Target.ARTIN, 2)
    with pytest.raises(PresentationError):
        build_cayley_ball(_dihedral(4), Target.COXETER, -1)
    with pytest.raises(ElementCapExceeded):
        build_cayley_ball(_dihedral(4), Target.ARTIN, 3, cap=20)


@pytest.mark.parametrize("m", [2, 3])
def test_path_walls_can_be_avoided(m: int) -> None:
    """Tests that every probe on a path graph ball finds a wall."""
    ball = build_cayley_ball(_path(m), Target.COXETER, 4)
    results = probe_ball(ball)
    assert results
    assert all(result.found is not None for result in results)
    assert all(result.caveat is None for result in results)


def test_spherical_walls_cross() -> None:
    """Tests that a finite triangle group has probes without a disjoint wall."""
    graph = labeled_graph(("a", "b", "c"), (("a", "b", 2), ("b", "c", 3), ("a", "c", 3)))
    ball = build_cayley_ball(graph, Target.COXETER, 6)
    failures = [result for result in probe_ball(ball) if result.found is None]
    assert failures
    assert failures[0].candidates


def test_single_probe() -> None:
    """Tests the square rule between two faces of a path ball."""
    ball = build_cayley_ball(_path(2), Target.COXETER, 4)
    c = ball.complex_spec
    walls = trace_all_hypergraphs(c)
    sigma = c.faces[0]
    tau_id = next(
        face_id
        for ref in sigma.boundary
        for face_id, _ in c.traversals[ref.edge]
        if face_id != sigma.id
    )
    wall = next(wall for wall in walls if sigma.id in wall.faces)
    result = coxeter_wall_probe(ball, sigma.id, tau_id, wall)
    assert result.found is not None
    assert result.rule in {"square rule", "fallback"}


def test_example_a2_diagram() -> None:
    """Tests that the reduced A2 diagram carries a closed wall."""
    diagram = example_a2_diagram()
    assert len(diagram.regions) == 12
    verdict = validate_diagram(diagram, example_a2_presentation())
    assert verdict.valid
    assert verdict.reduced
    walls = trace_all_hypergraphs(diagram_to_complex(diagram))
    closed = [wall for wall in walls if not wall.forest]
    assert closed
    assert len(closed[0].cycle) == 8
