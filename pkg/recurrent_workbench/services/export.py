"""
Graphviz DOT renderings.

Nodes and edges are emitted in sorted order so that equal inputs give
byte-identical files.
"""
from typing import Sequence

from recurrent_workbench.models.artin import Hypergraph
from recurrent_workbench.models.diagram import PlanarDiagram
from recurrent_workbench.models.recurrence import TransitionDigraph
from recurrent_workbench.services.diagrams import region_label
from recurrent_workbench.services.words import format_word


def _quote(text: str) -> str:
    escaped = text.replace('"', '\\"')
    return f'"{escaped}"'


def digraph_to_dot(d: TransitionDigraph, name: str = "transitions") -> str:
    """Transition digraph; arcs carry their probability, dead ends are boxed."""
    dead = set(d.dead_ends)
    lines = [f"digraph {_quote(name)} {{"]
    for index, token in sorted(enumerate(d.nodes), key=lambda item: item[1].label()):
        shape = "box" if index in dead else "ellipse"
        lines.append(f"  {_quote(token.label())} [shape={shape}];")
    arcs = sorted(
        (d.nodes[source].label(), d.nodes[target].label(), probability)
        for source, target, probability in d.arcs
    )
    for source_label, target_label, probability in arcs:
        lines.append(f"  {_quote(source_label)} -> {_quote(target_label)} [label={_quote(str(probability))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hypergraphs_to_dot(walls: Sequence[Hypergraph], name: str = "hypergraphs") -> str:
    """
    Walls as undirected graphs on carrier edges.

    Every wall is a cluster; hypergraph edges are annotated with the
    carrier face and position they come from.
    """
    lines = [f"graph {_quote(name)} {{"]
    for wall in sorted(walls, key=lambda item: item.component):
        status = "forest" if wall.forest else "cycle"
        lines.append(f"  subgraph {_quote(f'cluster_{wall.component}')} {{")
        lines.append(f"    label={_quote(f'wall {wall.component} ({status})')};")
        for edge in sorted(wall.edges):
            lines.append(f"    {_quote(edge)};")
        for face, position, first, second in wall.pairs:
            lines.append(f"    {_quote(first)} -- {_quote(second)} [label={_quote(f'{face}:{position}')}];")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def diagram_dual_to_dot(d: PlanarDiagram, name: str = "dual") -> str:
    """Dual graph of a diagram: regions joined across shared edges, boundary edges to an outer node."""
    owners: dict[str, list[str]] = {edge.id: [] for edge in d.edges}
    for region in d.regions:
        for dart in region.boundary:
            owners[dart.edge].append(region.id)
    for dart in d.boundary:
        owners[dart.edge].append("outside")
    lines = [f"graph {_quote(name)} {{", f"  {_quote('outside')} [shape=point];"]
    for region in sorted(d.regions, key=lambda item: item.id):
        label = f"{region.id}\\n{format_word(region_label(d, region))}"
        lines.append(f"  {_quote(region.id)} [shape=box,label={_quote(label)}];")
    for edge_id in sorted(owners):
        sides = owners[edge_id]
        if len(sides) == 2:
            lines.append(f"  {_quote(sides[0])} -- {_quote(sides[1])} [label={_quote(edge_id)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
