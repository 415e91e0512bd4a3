"""
Hypergraphs (walls) of complexes with even-sided faces.

The hypergraph vertices are the edges of the complex; every face with
2n sides contributes n hypergraph edges joining its antipodal edges.
"""
import logging
from collections import Counter

import networkx as nx

from recurrent_workbench.exceptions import OddFaceError, UnknownElementError
from recurrent_workbench.models.artin import Hypergraph
from recurrent_workbench.models.complex import ComplexSpec
from recurrent_workbench.services.complexes import skeleton_graph

logger = logging.getLogger(__name__)

TRUNCATION_NOTE = "traced inside a finite carrier; tree-ness of the infinite complex is not certified"


def dual_graph(c: ComplexSpec) -> nx.MultiGraph:
    """
    Antipodal pairing of every even-sided face.

    Hypergraph edges are keyed ``face:position`` and carry ``face`` and
    ``position`` attributes.
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(edge.id for edge in c.edges)
    for face in c.faces:
        if face.size % 2:
            continue
        half = face.size // 2
        for position in range(half):
            graph.add_edge(
                face.boundary[position].edge,
                face.boundary[position + half].edge,
                key=f"{face.id}:{position}",
                face=face.id,
                position=position,
            )
    return graph


def _odd_edges(c: ComplexSpec) -> dict[str, str]:
    return {ref.edge: face.id for face in c.faces if face.size % 2 for ref in face.boundary}


def _component(c: ComplexSpec, graph: nx.MultiGraph, edges: set[str], index: int) -> Hypergraph:
    odd = _odd_edges(c)
    touched = sorted(edge for edge in edges if edge in odd)
    if touched:
        raise OddFaceError(f"face {odd[touched[0]]} has an odd number of sides")
    sub = graph.subgraph(edges)
    pairs = tuple(
        sorted(
            (data["face"], data["position"], first, second)
            for first, second, data in sub.edges(data=True)
        ),
    )
    forest = nx.is_forest(sub)
    cycle: tuple[str, ...] = ()
    if not forest:
        cycle = tuple(sub.edges[step]["face"] for step in nx.find_cycle(sub))
    uses = Counter(pair[0] for pair in pairs)
    embedded = all(count == 1 for count in uses.values())
    skeleton = skeleton_graph(c)
    skeleton.remove_edges_from(
        [(tail, head, key) for tail, head, key in skeleton.edges(keys=True) if key in edges],
    )
    return Hypergraph(
        component=index,
        edges=frozenset(edges),
        pairs=pairs,
        forest=forest,
        embedded=embedded,
        cycle=cycle,
        complement_components=nx.number_connected_components(skeleton),
        notes=(TRUNCATION_NOTE,),
    )


def trace_hypergraph(c: ComplexSpec, start: str, index: int = 0) -> Hypergraph:
    """
    Hypergraph through one edge.

    :param c: complex.
    :param start: edge id.
    :param index: component number reported.
    :raises UnknownElementError: for an unknown edge.
    :raises OddFaceError: when the component meets an odd-sided face.
    :return: the component with its forest and embedding flags.
    """
    if start not in c.edge_map:
        raise UnknownElementError(f"unknown edge {start!r}")
    graph = dual_graph(c)
    return _component(c, graph, set(nx.node_connected_component(graph, start)), index)


def trace_all_hypergraphs(c: ComplexSpec) -> list[Hypergraph]:
    """
    Every hypergraph of a complex whose faces are all even-sided.

    Components are numbered in the order of their first edge in ``c.edges``.
    """
    graph = dual_graph(c)
    found: list[Hypergraph] = []
    covered: set[str] = set()
    for edge in c.edges:
        if edge.id in covered:
            continue
        edges = set(nx.node_connected_component(graph, edge.id))
        covered |= edges
        found.append(_component(c, graph, edges, len(found)))
    logger.debug("%d hypergraphs traced", len(found))
    return found


def walls_cross(first: Hypergraph, second: Hypergraph) -> list[str]:
    """Faces in which two distinct walls meet."""
    if first.edges == second.edges:
        return []
    return sorted(first.faces & second.faces)
