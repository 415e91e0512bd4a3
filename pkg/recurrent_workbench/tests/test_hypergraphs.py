"""Hypergraphs of even-sided complexes."""
from typing import Callable

import pytest

from recurrent_workbench.exceptions import OddFaceError, UnknownElementError
from recurrent_workbench.models.complex import ComplexSpec
from recurrent_workbench.services.diagrams import diagram_to_complex, square_grid_diagram
from recurrent_workbench.services.hypergraphs import dual_graph, trace_all_hypergraphs, trace_hypergraph, walls_cross

Loader = Callable[[str], ComplexSpec]


def test_grid_walls() -> None:
    """Tests that the 2x2 grid has two column walls and two row walls."""
    c = diagram_to_complex(square_grid_diagram(2, 2))
    walls = trace_all_hypergraphs(c)
    assert len(walls) == 4
    assert [wall.component for wall in walls] == [0, 1, 2, 3]
    assert all(wall.forest and wall.embedded for wall in walls)
    column = next(wall for wall in walls if "h00" in wall.edges)
    row = next(wall for wall in walls if "v00" in wall.edges)
    assert column.edges == frozenset({"h00", "h01", "h02"})
    assert column.faces == frozenset({"s00", "s01"})
    assert column.complement_components == 2
    assert walls_cross(column, row) == ["s00"]
    assert walls_cross(column, column) == []


def test_single_wall() -> None:
    """Tests tracing one wall from an edge."""
    c = diagram_to_complex(square_grid_diagram(2, 2))
    wall = trace_hypergraph(c, "v11", index=7)
    assert wall.component == 7
    assert wall.edges == frozenset({"v01", "v11", "v21"})
    assert wall.notes


def test_book_wall_is_not_a_forest(load_complex: Loader) -> None:
    """Tests that three pages pairing the same edges close up a wall."""
    wall = trace_hypergraph(load_complex("three-page"), "e0")
    assert wall.edges == frozenset({"e0", "e2"})
    assert not wall.forest
    assert len(wall.cycle) == 2
    assert wall.embedded


def test_dual_graph_skips_odd_faces(load_complex: Loader) -> None:
    """Tests that triangles contribute no hypergraph edges."""
    graph = dual_graph(load_complex("pillow"))
    assert sorted(graph.nodes) == ["e0", "e1", "e2"]
    assert graph.number_of_edges() == 0


def test_odd_face_is_rejected(load_complex: Loader) -> None:
    """Tests that a wall may not meet an odd face."""
    with pytest.raises(OddFaceError):
        trace_hypergraph(load_complex("triangle"), "e0")


def test_unknown_start(load_complex: Loader) -> None:
    """Tests the unknown edge error."""
    with pytest.raises(UnknownElementError):
        trace_hypergraph(load_complex("three-page"), "e9")
