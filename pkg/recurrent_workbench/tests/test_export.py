"""DOT renderings."""
from typing import Callable

from recurrent_workbench.models.complex import ComplexSpec
from recurrent_workbench.services.diagrams import diagram_to_complex, square_grid_diagram
from recurrent_workbench.services.export import diagram_dual_to_dot, digraph_to_dot, hypergraphs_to_dot
from recurrent_workbench.services.hypergraphs import trace_all_hypergraphs
from recurrent_workbench.services.recurrence import build_markov

Loader = Callable[[str], ComplexSpec]


def test_digraph_dot(load_complex: Loader) -> None:
    """Tests the transition digraph rendering of the pillow."""
    digraph = build_markov(load_complex("pillow"))
    dot = digraph_to_dot(digraph)
    assert dot.startswith('digraph "transitions" {\n')
    assert dot.endswith("}\n")
    assert dot.count(" -> ") == len(digraph.arcs)
    assert dot.count("[shape=ellipse]") == len(digraph.nodes)
    assert dot == digraph_to_dot(build_markov(load_complex("pillow")))


def test_dead_ends_are_boxed(load_complex: Loader) -> None:
    """Tests that tokens without continuation are drawn as boxes."""
    digraph = build_markov(load_complex("triangle"))
    dot = digraph_to_dot(digraph, name="lone")
    assert dot.startswith('digraph "lone" {')
    assert dot.count("[shape=box]") == len(digraph.nodes)
    assert " -> " not in dot


def test_hypergraph_dot(load_complex: Loader) -> None:
    """Tests wall clusters and their status labels."""
    grid = hypergraphs_to_dot(trace_all_hypergraphs(diagram_to_complex(square_grid_diagram(2, 2))))
    assert grid.startswith('graph "hypergraphs" {')
    assert 'subgraph "cluster_3"' in grid
    assert grid.count("(forest)") == 4
    assert '"h00" -- "h01" [label="s00:0"];' in grid
    book = hypergraphs_to_dot(trace_all_hypergraphs(load_complex("three-page")))
    assert "(cycle)" in book


def test_diagram_dual_dot() -> None:
    """Tests that regions are joined across interior edges and to the outside across boundary edges."""
    dot = diagram_dual_to_dot(square_grid_diagram(2, 2))
    assert '"s00" -- "s10" [label="v10"];' in dot
    assert '"s00" -- "outside" [label="h00"];' in dot
    assert '"s00" [shape=box,label="s00\\nabAB"];' in dot
