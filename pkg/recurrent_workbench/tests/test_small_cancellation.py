"""Pieces, link graphs and small-cancellation checks."""
from typing import Callable

import networkx as nx
import pytest

from recurrent_workbench.exceptions import PresentationError
from recurrent_workbench.models.artin import Target
from recurrent_workbench.models.diagram import Presentation
from recurrent_workbench.services.artin import labeled_graph, standard_presentation
from recurrent_workbench.services.small_cancellation import (
    check_small_cancellation,
    compute_pieces,
    link_graph,
    short_cycle,
)

Loader = Callable[[str], Presentation]


def test_dihedral_pieces(load_presentation: Loader) -> None:
    """Tests the longest piece at every position of ababABAB."""
    table = compute_pieces(load_presentation("dihedral4"))
    assert table.max_pieces == ((3, 3, 2, 1, 3, 3, 2, 1),)
    assert ("a", "b", "a") in table.pieces
    assert ("a", "b", "a", "b") not in table.pieces


def test_longest_dihedral_piece_grows(load_presentation: Loader) -> None:
    """Tests that ababaBABAB has pieces of length four."""
    table = compute_pieces(load_presentation("dihedral5"))
    assert max(max(row) for row in table.max_pieces) == 4


def test_block_mode_ignores_same_generators(load_presentation: Loader) -> None:
    """Tests that a single two-generator relator has no block pieces."""
    table = compute_pieces(load_presentation("dihedral4"), mode="block")
    assert table.pieces == frozenset()
    assert check_small_cancellation(load_presentation("dihedral4"), "C(6)", mode="block").holds


@pytest.mark.parametrize(
    "condition, holds",
    [
        ("C(4)", True),
        ("C(5)", False),
        ("B6", False),
    ],
)
def test_dihedral_conditions(load_presentation: Loader, condition: str, holds: bool) -> None:
    """Tests metric conditions on ababABAB."""
    verdict = check_small_cancellation(load_presentation("dihedral4"), condition)
    assert verdict.holds is holds
    assert (verdict.witness is None) is holds


def test_failing_cover_is_reported(load_presentation: Loader) -> None:
    """Tests that the witness spells the relator as a product of pieces."""
    verdict = check_small_cancellation(load_presentation("dihedral4"), "C(5)")
    assert verdict.condition == "C(5)"
    assert verdict.witness is not None
    assert verdict.witness.startswith("ababABAB = ")
    assert verdict.witness.count(" . ") == 3


@pytest.mark.parametrize(
    "condition, holds",
    [
        ("C(4)", True),
        ("C(5)", False),
        ("T(4)", True),
        ("T(5)", False),
    ],
)
def test_commutator_conditions(load_presentation: Loader, condition: str, holds: bool) -> None:
    """Tests the torus presentation on the C and T scales."""
    assert check_small_cancellation(load_presentation("commutator"), condition).holds is holds


def test_commutator_link_is_a_square(load_presentation: Loader) -> None:
    """Tests that the link of abAB is a four-cycle."""
    graph = link_graph(load_presentation("commutator"))
    assert sorted(graph.nodes) == ["A", "B", "a", "b"]
    assert graph.number_of_edges() == 4
    assert all(degree == 2 for _, degree in graph.degree)
    assert short_cycle(graph, 4) is None
    assert sorted(short_cycle(graph, 5) or []) == ["A", "B", "a", "b"]


def test_short_cycle_finds_triangle() -> None:
    """Tests the triangle search on a small graph."""
    graph = nx.Graph([("x", "y"), ("y", "z"), ("z", "x"), ("z", "w")])
    assert sorted(short_cycle(graph, 4) or []) == ["x", "y", "z"]
    assert short_cycle(graph, 3) is None


@pytest.mark.parametrize("condition", ["D(3)", "C", "B(7)"])
def test_unknown_condition(load_presentation: Loader, condition: str) -> None:
    """Tests that unknown conditions are rejected."""
    with pytest.raises(PresentationError):
        check_small_cancellation(load_presentation("commutator"), condition)


def test_unknown_mode(load_presentation: Loader) -> None:
    """Tests that unknown piece modes are rejected."""
    with pytest.raises(PresentationError):
        compute_pieces(load_presentation("commutator"), mode="reduced")


def test_b6_witness_spells_three_pieces(load_presentation: Loader) -> None:
    """Tests that the B(6) witness is at most three pieces longer than half the relator."""
    verdict = check_small_cancellation(load_presentation("dihedral4"), "B6")
    assert verdict.witness == "ababABAB at 0: a . bab . ABA has length 7 > 8/2"


def test_block_mode_on_single_relator(load_presentation: Loader) -> None:
    """Tests that ababaBABAB satisfies C(6) once same-generator overlaps are ignored."""
    p = load_presentation("dihedral5")
    assert not check_small_cancellation(p, "C(6)").holds
    assert compute_pieces(p, mode="block").pieces == frozenset()
    assert check_small_cancellation(p, "C(6)", mode="block").holds


def test_block_pieces_of_extra_large_triangle() -> None:
    """Tests that relators over different edges of a 4, 4, 5 triangle share only single letters."""
    g = labeled_graph(("a", "b", "c"), [("a", "b", 4), ("b", "c", 4), ("a", "c", 5)])
    p = standard_presentation(g, Target.ARTIN)
    table = compute_pieces(p, mode="block")
    assert table.pieces == frozenset((letter,) for letter in "abcABC")
    assert all(set(row) == {1} for row in table.max_pieces)
    assert check_small_cancellation(p, "C(6)", mode="block").holds
    assert check_small_cancellation(p, "B6", mode="block").holds
