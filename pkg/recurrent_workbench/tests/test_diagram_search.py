"""Breadth-first disc diagram search."""
from typing import Callable

import pytest

from recurrent_workbench.exceptions import UnknownElementError
from recurrent_workbench.models.complex import ComplexSpec, EdgeRef
from recurrent_workbench.models.diagram import Presentation
from recurrent_workbench.services.diagram_search import (
    corner_subwords,
    dihedral_presentation,
    fold_word,
    search_disc_diagram,
    search_disc_diagram_in_complex,
)
from recurrent_workbench.services.diagrams import boundary_word, region_label, validate_diagram
from recurrent_workbench.services.words import build_presentation, format_word, parse_word, rotate

ComplexLoader = Callable[[str], ComplexSpec]
PresentationLoader = Callable[[str], Presentation]


def test_fold_word_is_cyclic() -> None:
    """Tests that folding cancels across the end of the word."""
    assert fold_word(parse_word("abBcA")) == ("c",)
    assert fold_word(parse_word("aA")) == ()


def test_single_region(load_presentation: PresentationLoader) -> None:
    """Tests that a relator bounds one region."""
    p = load_presentation("commutator")
    result = search_disc_diagram(parse_word("abAB"), p, max_area=2)
    assert result.area == 1
    assert result.diagram is not None
    assert validate_diagram(result.diagram, p).valid
    assert format_word(region_label(result.diagram, result.diagram.regions[0])) == "abAB"


def test_grid_area(load_presentation: PresentationLoader) -> None:
    """Tests that aabbAABB needs four commutator squares."""
    result = search_disc_diagram(parse_word("aabbAABB"), load_presentation("commutator"), max_area=4)
    assert result.area == 4
    assert not result.exhausted
    assert result.diagram is not None
    assert len(result.diagram.regions) == 4
    assert format_word(boundary_word(result.diagram)) == "aabbAABB"


def test_trivial_word_has_empty_diagram(load_presentation: PresentationLoader) -> None:
    """Tests that a freely trivial word needs no regions."""
    result = search_disc_diagram(parse_word("aA"), load_presentation("commutator"), max_area=1)
    assert result.area == 0
    assert result.diagram is not None
    assert result.diagram.regions == ()


def test_search_bound_is_reported(load_presentation: PresentationLoader) -> None:
    """Tests that a bound below the least area is exhausted."""
    result = search_disc_diagram(parse_word("aabbAABB"), load_presentation("commutator"), max_area=3)
    assert result.diagram is None
    assert result.area is None
    assert result.exhausted
    assert result.explored_states > 1


def test_nonzero_exponent_sum_is_rejected(load_presentation: PresentationLoader) -> None:
    """Tests that a word that cannot be trivial is rejected without expanding a state."""
    result = search_disc_diagram(parse_word("ab"), load_presentation("commutator"), max_area=2)
    assert result.exhausted
    assert result.explored_states == 1


def test_area_is_least_with_slack_in_bound(load_presentation: PresentationLoader) -> None:
    """Tests that a bound above the least area still returns the least area."""
    result = search_disc_diagram(parse_word("aabbAABB"), load_presentation("commutator"), max_area=5)
    assert result.area == 4
    assert result.diagram is not None
    assert len(result.diagram.regions) == 4


def test_three_by_two_grid(load_presentation: PresentationLoader) -> None:
    """Tests that aaabbAAABB is filled by six squares."""
    p = load_presentation("commutator")
    result = search_disc_diagram(parse_word("aaabbAAABB"), p, max_area=7)
    assert result.area == 6
    assert result.diagram is not None
    assert validate_diagram(result.diagram, p).valid
    assert format_word(boundary_word(result.diagram)) == "aaabbAAABB"


def test_bridge_splits_hole() -> None:
    """Tests a boundary edge that lies on no region."""
    p = build_presentation(("a", "b", "c"), [parse_word("abAB")])
    result = search_disc_diagram(parse_word("cabABCbaBA"), p, max_area=2)
    assert result.area == 2
    assert result.diagram is not None
    assert len(result.diagram.regions) == 2
    assert validate_diagram(result.diagram, p).valid
    assert format_word(boundary_word(result.diagram)) == "cabABCbaBA"


def test_dihedral_presentation() -> None:
    """Tests the dihedral Artin relators."""
    assert dihedral_presentation(3).relators == (parse_word("abaBAB"),)
    assert dihedral_presentation(4).relators == (parse_word("ababABAB"),)


def test_face_boundary_in_complex(load_complex: ComplexLoader) -> None:
    """Tests that a face boundary of the pillow bounds one region."""
    path = [EdgeRef("e0"), EdgeRef("e1"), EdgeRef("e2")]
    result = search_disc_diagram_in_complex(load_complex("pillow"), path, max_area=2)
    assert result.area == 1
    assert not result.collar
    assert result.diagram is not None
    assert boundary_word(result.diagram) == ("e0+", "e1+", "e2+")


def test_collar_for_repeated_vertex(load_complex: ComplexLoader) -> None:
    """Tests that a path through one vertex three times is pushed off itself first."""
    path = [EdgeRef("a"), EdgeRef("c"), EdgeRef("b", False)]
    result = search_disc_diagram_in_complex(load_complex("flat-torus"), path, max_area=2)
    assert result.collar
    assert result.area == 1
    assert result.diagram is not None
    assert [region.marker for region in result.diagram.regions] == ["T1"]
    assert len(result.diagram.vertices) == 3


def test_open_path_is_rejected(load_complex: ComplexLoader) -> None:
    """Tests that the boundary path must close up."""
    with pytest.raises(UnknownElementError):
        search_disc_diagram_in_complex(load_complex("pillow"), [EdgeRef("e0"), EdgeRef("e1")], max_area=1)


def test_corner_subwords_of_relator() -> None:
    """Tests the two halves of a single dihedral region."""
    found = corner_subwords(parse_word("ababABAB"), 4, max_area=2)
    assert found is not None
    assert found.first == ("abab", 0)
    assert found.second == ("ABAB", 4)
    assert not found.overlapping
    assert found.area == 1


def test_corner_subwords_of_conjugate() -> None:
    """Tests halves separated by other syllables."""
    found = corner_subwords(parse_word("aababAABAB"), 4, max_area=3)
    assert found is not None
    assert found.first == ("abab", 1)
    assert found.second == ("ABAB", 6)
    assert not found.overlapping


def test_corner_subwords_need_large_label() -> None:
    """Tests the lower bound on the label."""
    with pytest.raises(UnknownElementError):
        corner_subwords(parse_word("abAB"), 2, max_area=1)


@pytest.mark.parametrize("shift", range(8))
def test_corner_subwords_follow_cyclic_shift(shift: int) -> None:
    """Tests that the halves of one dihedral region move with every shift of the word."""
    found = corner_subwords(rotate(parse_word("ababABAB"), shift), 4, max_area=2)
    assert found is not None
    assert found.area == 1
    assert not found.overlapping
    assert {found.first, found.second} == {("abab", -shift % 8), ("ABAB", (4 - shift) % 8)}


def test_corner_subwords_of_central_conjugate() -> None:
    """Tests a conjugate of the relator by an inverse letter of the other generator."""
    found = corner_subwords(parse_word("BababbABAB"), 4, max_area=3)
    assert found is not None
    assert found.area == 2
    assert found.first == ("abab", 1)
    assert found.second == ("ABAB", 6)
    assert not found.overlapping
