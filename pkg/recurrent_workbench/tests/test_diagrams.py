"""Disc diagrams: validation, reducedness, strips and separating vertices."""
from dataclasses import replace
from typing import Callable

import pytest

from recurrent_workbench.exceptions import NotDihedralRelatorError, UnknownElementError
from recurrent_workbench.models.complex import EdgeRef
from recurrent_workbench.models.diagram import DiagramEdge, PlanarDiagram, Presentation, Region
from recurrent_workbench.services.diagrams import (
    boundary_word,
    diagram_satisfies_c,
    diagram_satisfies_t,
    diagram_to_complex,
    find_strips,
    interior_degree,
    prune_spikes,
    region_arcs,
    separating_vertices,
    square_grid_diagram,
    validate_diagram,
)
from recurrent_workbench.services.words import format_word

DiagramLoader = Callable[[str], PlanarDiagram]
PresentationLoader = Callable[[str], Presentation]


def _folded_pair() -> PlanarDiagram:
    """Two squares reading abAB and AbaB, mirror images across v10."""
    grid = square_grid_diagram(1, 2)
    edges = tuple(
        DiagramEdge(id=edge.id, tail=edge.head, head=edge.tail, letter=edge.letter)
        if edge.id in {"h10", "h11"} else edge
        for edge in grid.edges
    )
    right = Region(
        id="s10",
        boundary=(EdgeRef("h10", False), EdgeRef("v20"), EdgeRef("h11"), EdgeRef("v10", False)),
    )
    boundary = (
        EdgeRef("h00"),
        EdgeRef("h10", False),
        EdgeRef("v20"),
        EdgeRef("h11"),
        EdgeRef("h01", False),
        EdgeRef("v00", False),
    )
    return replace(grid, edges=edges, regions=(grid.regions[0], right), boundary=boundary)


def _lonely_region(letter: str) -> PlanarDiagram:
    """One square region whose four edges carry the same letter."""
    vertices = ("x0", "x1", "x2", "x3")
    edges = tuple(
        DiagramEdge(id=f"e{k}", tail=vertices[k], head=vertices[(k + 1) % 4], letter=letter)
        for k in range(4)
    )
    darts = tuple(EdgeRef(f"e{k}") for k in range(4))
    return PlanarDiagram(vertices=vertices, edges=edges, regions=(Region(id="r", boundary=darts),), boundary=darts)


def test_grid_is_valid_and_reduced(load_presentation: PresentationLoader) -> None:
    """Tests a commutator grid against the torus presentation."""
    grid = square_grid_diagram(2, 3)
    verdict = validate_diagram(grid, load_presentation("commutator"))
    assert verdict.valid
    assert verdict.reduced
    assert format_word(boundary_word(grid)) == "aaabbAAABB"


def test_tab_is_valid_and_reduced(load_diagram: DiagramLoader, load_presentation: PresentationLoader) -> None:
    """Tests the grid with a tab attached to its right side."""
    verdict = validate_diagram(load_diagram("tab"), load_presentation("commutator"))
    assert verdict.violations == ()
    assert verdict.mirror_edges == ()


def test_foreign_label_is_reported(load_diagram: DiagramLoader, load_presentation: PresentationLoader) -> None:
    """Tests that a region label outside the symmetrized relators is a violation."""
    verdict = validate_diagram(load_diagram("tab"), load_presentation("dihedral4"))
    assert not verdict.valid
    assert {location for location, _ in verdict.violations} >= {"s00", "s21"}


def test_mirror_pair_is_not_reduced(load_presentation: PresentationLoader) -> None:
    """Tests that two regions folding onto each other across an edge are found."""
    verdict = validate_diagram(_folded_pair(), load_presentation("commutator"))
    assert verdict.valid
    assert verdict.mirror_edges == ("v10",)
    assert not verdict.reduced


def test_open_region_is_reported() -> None:
    """Tests that a region boundary must close up."""
    grid = square_grid_diagram(1, 1)
    region = grid.regions[0]
    broken = replace(region, boundary=region.boundary[:3] + (region.boundary[3].reversed(),))
    verdict = validate_diagram(replace(grid, regions=(broken,)))
    assert not verdict.valid
    assert ("s00", "open boundary at position 2") in verdict.violations


def test_dangling_dart_is_reported() -> None:
    """Tests that regions may only use known edges."""
    grid = square_grid_diagram(1, 1)
    broken = replace(grid.regions[0], boundary=grid.regions[0].boundary + (EdgeRef("zz"),))
    verdict = validate_diagram(replace(grid, regions=(broken,)))
    assert verdict.violations == (("s00", "dangling edge reference 'zz'"),)


def test_grid_region_arcs() -> None:
    """Tests that a corner square of the 2x2 grid has two interior arcs."""
    grid = square_grid_diagram(2, 2)
    corner = grid.region_map["s00"]
    assert [tuple(str(dart) for dart in arc) for arc in region_arcs(grid, corner)] == [
        ("v10+",),
        ("h01-",),
        ("v00-", "h00+"),
    ]
    assert interior_degree(grid, corner) == 2


def test_grid_conditions() -> None:
    """Tests C(4) and T(4) on the 3x3 grid and their failure one step up."""
    grid = square_grid_diagram(3, 3)
    assert diagram_satisfies_c(grid, 4)
    assert not diagram_satisfies_c(grid, 5)
    assert diagram_satisfies_t(grid, 4)
    assert not diagram_satisfies_t(grid, 5)


def test_four_compound_strips() -> None:
    """Tests that the 2x2 grid falls into the four compound strip case."""
    report = find_strips(square_grid_diagram(2, 2))
    assert report.case == "iii"
    assert report.singleton_strips == ()
    assert report.compound_strips == (("s00", "s01"), ("s00", "s10"), ("s01", "s11"), ("s10", "s11"))
    assert set(report.interior_degrees.values()) == {2}
    assert report.c4 and report.t4


def test_singleton_and_compound_strips(load_diagram: DiagramLoader) -> None:
    """Tests that the tab is a singleton strip next to two compound strips."""
    report = find_strips(load_diagram("tab"))
    assert report.case == "ii"
    assert report.singleton_strips == ("s21",)
    assert ("s00", "s01") in report.compound_strips
    assert ("s00", "s10") in report.compound_strips


def test_single_region_has_no_case() -> None:
    """Tests that the trichotomy needs more than one region."""
    report = find_strips(square_grid_diagram(1, 1))
    assert report.case is None
    assert "more than one region required" in report.notes


def test_spikes_are_pruned() -> None:
    """Tests that a hanging edge is removed before counting strips."""
    grid = square_grid_diagram(1, 1)
    spiked = replace(
        grid,
        vertices=grid.vertices + ("x",),
        edges=grid.edges + (DiagramEdge(id="t", tail="g00", head="x", letter="a"),),
        boundary=(EdgeRef("t"), EdgeRef("t", False)) + grid.boundary,
    )
    core, removed = prune_spikes(spiked)
    assert removed == ("x",)
    assert core.boundary == grid.boundary
    assert core.edges == grid.edges
    report = find_strips(spiked)
    assert report.spikes == ("x",)
    assert "1 spikes pruned before counting" in report.notes


def test_buried_separating_vertices(load_diagram: DiagramLoader, load_presentation: PresentationLoader) -> None:
    """Tests the halves of an ababABAB region with one separating vertex inside the disc."""
    d = load_diagram("buried")
    assert validate_diagram(d, load_presentation("buried")).valid
    found = separating_vertices(d, "R1")
    assert (found.positive_start, found.negative_start) == ("v0", "v4")
    assert found.exposed is False


def test_separating_vertices_of_square() -> None:
    """Tests that a commutator square on the boundary is exposed."""
    found = separating_vertices(square_grid_diagram(1, 1), "s00")
    assert (found.positive_start, found.negative_start) == ("g00", "g11")
    assert found.exposed


def test_non_dihedral_label() -> None:
    """Tests that aaaa has no separating vertices."""
    with pytest.raises(NotDihedralRelatorError):
        separating_vertices(_lonely_region("a"), "r")


def test_unknown_region() -> None:
    """Tests the unknown region error."""
    with pytest.raises(UnknownElementError):
        separating_vertices(square_grid_diagram(1, 1), "s99")


def test_grid_as_complex() -> None:
    """Tests that grid squares become Gon(4) faces with unit edges."""
    c = diagram_to_complex(square_grid_diagram(2, 2))
    assert [face.shape for face in c.faces] == ["Gon(4)"] * 4
    assert all(face.sides == (0, 1, 2, 3) for face in c.faces)
    assert len(c.vertices) - len(c.edges) + len(c.faces) == 1
