"""
Planar disc diagrams: structure checks, reducedness, strips and
separating vertices.
"""
import itertools
import logging
from collections import Counter
from typing import Iterable, Optional

import networkx as nx

from recurrent_workbench.exceptions import NotDihedralRelatorError, UnknownElementError
from recurrent_workbench.models.complex import ComplexSpec, Edge, EdgeRef, Face
from recurrent_workbench.models.diagram import (
    DiagramEdge,
    DiagramVerdict,
    PlanarDiagram,
    Presentation,
    Region,
    SeparatingVertices,
    StripReport,
)
from recurrent_workbench.services.quadratic import ONE
from recurrent_workbench.services.shapes import SUPPORTED_HALF_SIDES
from recurrent_workbench.services.words import (
    Word,
    format_word,
    generator_of,
    invert_letter,
    is_positive,
    symmetrize,
)

logger = logging.getLogger(__name__)


def dart_label(d: PlanarDiagram, dart: EdgeRef) -> str:
    letter = d.edge_map[dart.edge].letter
    return letter if dart.forward else invert_letter(letter)


def region_label(d: PlanarDiagram, region: Region) -> Word:
    return tuple(dart_label(d, dart) for dart in region.boundary)


def boundary_word(d: PlanarDiagram) -> Word:
    return tuple(dart_label(d, dart) for dart in d.boundary)


def _face_cycles(d: PlanarDiagram) -> list[tuple[str, tuple[EdgeRef, ...]]]:
    """Region cycles followed by the outer face, which runs along reversed boundary darts."""
    outer = tuple(dart.reversed() for dart in reversed(d.boundary))
    return [(region.id, region.boundary) for region in d.regions] + [("outside", outer)]


def _structure_violations(d: PlanarDiagram) -> list[tuple[str, str]]:  # noqa: C901
    violations: list[tuple[str, str]] = []
    known = set(d.vertices)
    for edge in d.edges:
        for end in (edge.tail, edge.head):
            if end not in known:
                violations.append((f"edges.{edge.id}", f"unknown vertex {end!r}"))
    cycles = _face_cycles(d)
    for name, cycle in cycles:
        for dart in cycle:
            if dart.edge not in d.edge_map:
                violations.append((name, f"dangling edge reference {dart.edge!r}"))
    if violations:
        return violations
    for name, cycle in cycles:
        for position, dart in enumerate(cycle):
            if d.end(dart) != d.start(cycle[(position + 1) % len(cycle)]):
                violations.append((name, f"open boundary at position {position}"))

    uses = Counter(dart for _, cycle in cycles for dart in cycle)
    for edge in d.edges:
        for forward in (True, False):
            count = uses[EdgeRef(edge.id, forward)]
            if count != 1:
                violations.append((f"edges.{edge.id}", f"dart {EdgeRef(edge.id, forward)} used {count} times"))
    if violations:
        return violations

    following: dict[EdgeRef, EdgeRef] = {}
    for _, cycle in cycles:
        for position, dart in enumerate(cycle):
            following[dart] = cycle[(position + 1) % len(cycle)]
    seen: set[EdgeRef] = set()
    rotations: Counter[str] = Counter()
    for dart in following:
        if dart in seen:
            continue
        rotations[d.start(dart)] += 1
        current = dart
        while current not in seen:
            seen.add(current)
            current = following[current.reversed()]
    for vertex, count in rotations.items():
        if count != 1:
            violations.append((f"vertices.{vertex}", f"{count} rotation cycles, diagram is not a disc"))

    euler = len(d.vertices) - len(d.edges) + len(d.regions)
    if euler != 1:
        violations.append(("diagram", f"V - E + R = {euler}, expected 1"))
    skeleton = nx.MultiGraph()
    skeleton.add_nodes_from(d.vertices)
    skeleton.add_edges_from((edge.tail, edge.head) for edge in d.edges)
    if d.vertices and not nx.is_connected(skeleton):
        violations.append(("diagram", "diagram is not connected"))
    return violations


def mirror_edges(d: PlanarDiagram) -> tuple[str, ...]:
    """
    Edges shared by two regions whose labels read inverse words from it.

    :param d: diagram.
    :return: sorted edge ids of cancellable pairs.
    """
    owner: dict[EdgeRef, tuple[Region, int]] = {}
    for region in d.regions:
        for position, dart in enumerate(region.boundary):
            owner[dart] = (region, position)
    found = []
    for edge in d.edges:
        forward = owner.get(EdgeRef(edge.id, True))
        backward = owner.get(EdgeRef(edge.id, False))
        if forward is None or backward is None or forward[0].id == backward[0].id:
            continue
        first, first_at = forward
        second, second_at = backward
        if len(first.boundary) != len(second.boundary):
            continue
        size = len(first.boundary)
        ahead = [dart_label(d, first.boundary[(first_at + k) % size]) for k in range(size)]
        behind = [
            invert_letter(dart_label(d, second.boundary[(second_at - k) % size]))
            for k in range(size)
        ]
        if ahead == behind:
            found.append(edge.id)
    return tuple(sorted(found))


def validate_diagram(d: PlanarDiagram, p: Optional[Presentation] = None) -> DiagramVerdict:
    """
    Check disc structure, region labels and reducedness.

    :param d: diagram.
    :param p: presentation whose symmetrized relators label the regions.
    :return: verdict.
    """
    violations = _structure_violations(d)
    if violations:
        return DiagramVerdict(violations=tuple(violations))
    if p is not None:
        allowed = set(symmetrize(p.relators))
        for region in d.regions:
            label = region_label(d, region)
            if label not in allowed:
                violations.append((region.id, f"label {format_word(label)} is not a relator"))
    return DiagramVerdict(violations=tuple(violations), mirror_edges=mirror_edges(d))


def prune_spikes(d: PlanarDiagram) -> tuple[PlanarDiagram, tuple[str, ...]]:
    """
    Repeatedly remove valence-1 vertices with their edge.

    :param d: diagram.
    :return: spike-free core and the removed vertices in removal order.
    """
    vertices = list(d.vertices)
    edges = {edge.id: edge for edge in d.edges}
    boundary = list(d.boundary)
    removed: list[str] = []
    while True:
        valence = Counter({vertex: 0 for vertex in vertices})
        for edge in edges.values():
            valence[edge.tail] += 1
            valence[edge.head] += 1
        spikes = [vertex for vertex in vertices if valence[vertex] == 1 and len(edges) > 1]
        if not spikes:
            break
        spike = spikes[0]
        edge = next(edge for edge in edges.values() if spike in (edge.tail, edge.head))
        boundary = [dart for dart in boundary if dart.edge != edge.id]
        del edges[edge.id]
        vertices.remove(spike)
        removed.append(spike)
    core = PlanarDiagram(
        vertices=tuple(vertices),
        edges=tuple(edge for edge in d.edges if edge.id in edges),
        regions=d.regions,
        boundary=tuple(boundary),
    )
    return core, tuple(removed)


def region_arcs(d: PlanarDiagram, region: Region) -> list[tuple[EdgeRef, ...]]:
    """
    Boundary of a region cut at vertices of valence at least 3.

    :param d: diagram.
    :param region: region.
    :return: arcs in boundary order; a single arc when no vertex is cut.
    """
    darts = region.boundary
    cuts = [position for position, dart in enumerate(darts) if d.valence[d.start(dart)] >= 3]
    if not cuts:
        return [darts]
    arcs = []
    for index, cut in enumerate(cuts):
        stop = cuts[(index + 1) % len(cuts)]
        length = (stop - cut) % len(darts) or len(darts)
        arcs.append(tuple(darts[(cut + k) % len(darts)] for k in range(length)))
    return arcs


def _is_interior(d: PlanarDiagram, arc: tuple[EdgeRef, ...]) -> bool:
    return arc[0].edge not in d.boundary_edges


def interior_degree(d: PlanarDiagram, region: Region) -> int:
    return sum(1 for arc in region_arcs(d, region) if _is_interior(d, arc))


def _complement_connected(d: PlanarDiagram, removed: Iterable[str]) -> bool:
    """Whether the diagram minus the closed union of some regions is connected."""
    removed_set = set(removed)
    closed_edges = {dart.edge for region_id in removed_set for dart in d.region_map[region_id].boundary}
    closed_vertices = {end for edge_id in closed_edges for end in (d.edge_map[edge_id].tail, d.edge_map[edge_id].head)}
    cells = nx.Graph()
    for region in d.regions:
        if region.id in removed_set:
            continue
        cells.add_node(("region", region.id))
        for dart in region.boundary:
            if dart.edge not in closed_edges:
                cells.add_edge(("region", region.id), ("edge", dart.edge))
    for edge in d.edges:
        if edge.id in closed_edges:
            continue
        cells.add_node(("edge", edge.id))
        for end in (edge.tail, edge.head):
            if end not in closed_vertices:
                cells.add_edge(("edge", edge.id), ("vertex", end))
    for vertex in d.vertices:
        if vertex not in closed_vertices:
            cells.add_node(("vertex", vertex))
    return cells.number_of_nodes() == 0 or nx.is_connected(cells)


def _shared_interior_arcs(d: PlanarDiagram, first: Region, second: Region) -> int:
    other = {dart.reversed() for dart in second.boundary}
    return sum(
        1
        for arc in region_arcs(d, first)
        if _is_interior(d, arc) and arc[0] in other
    )


def _compound_strips(d: PlanarDiagram, degrees: dict[str, int]) -> list[tuple[str, ...]]:
    boundary_regions = [
        region for region in d.regions
        if any(dart.edge in d.boundary_edges for dart in region.boundary)
    ]
    adjacency = nx.Graph()
    for first, second in itertools.combinations(boundary_regions, 2):
        if _shared_interior_arcs(d, first, second) == 1:
            adjacency.add_edge(first.id, second.id)
    ends = sorted(region.id for region in boundary_regions if degrees[region.id] == 2 and region.id in adjacency)
    found: list[tuple[str, ...]] = []
    seen: set[tuple[str, ...]] = set()
    for start in ends:
        stack = [(start, (start,))]
        while stack:
            node, chain = stack.pop()
            for neighbour in sorted(adjacency.neighbors(node)):
                if neighbour in chain:
                    continue
                extended = chain + (neighbour,)
                if degrees[neighbour] == 2:
                    key = min(extended, extended[::-1])
                    if key not in seen and _complement_connected(d, extended):
                        seen.add(key)
                        found.append(key)
                elif degrees[neighbour] == 3:
                    stack.append((neighbour, extended))
    return sorted(found)


def diagram_satisfies_c(d: PlanarDiagram, bound: int) -> bool:
    """Every interior region has at least ``bound`` arcs."""
    return all(
        len(region_arcs(d, region)) >= bound
        for region in d.regions
        if not any(dart.edge in d.boundary_edges for dart in region.boundary)
    )


def diagram_satisfies_t(d: PlanarDiagram, bound: int) -> bool:
    """Every interior vertex of valence at least 3 has valence at least ``bound``."""
    return all(
        d.valence[vertex] >= bound
        for vertex in d.vertices
        if vertex not in d.boundary_vertices and d.valence[vertex] >= 3
    )


def find_strips(d: PlanarDiagram) -> StripReport:
    """
    Spikes, interior degrees, strips and the strip trichotomy.

    The trichotomy is evaluated on the spike-free core: (i) two singleton
    strips, (ii) one singleton strip and two compound strips, (iii) four
    compound strips.

    :param d: valid disc diagram.
    :return: report.
    """
    core, spikes = prune_spikes(d)
    degrees = {region.id: interior_degree(core, region) for region in core.regions}
    boundary_regions = [
        region.id for region in core.regions
        if any(dart.edge in core.boundary_edges for dart in region.boundary)
    ]
    simple = tuple(
        region for region in boundary_regions if _complement_connected(core, (region,))
    )
    singletons = tuple(region for region in simple if degrees[region] <= 1)
    compounds = tuple(_compound_strips(core, degrees))
    c4 = diagram_satisfies_c(core, 4)
    t4 = diagram_satisfies_t(core, 4)
    notes: list[str] = []
    case: Optional[str] = None
    if len(core.regions) <= 1:
        notes.append("more than one region required")
    elif not (c4 and t4):
        notes.append("diagram is not C(4)-T(4)")
    elif len(singletons) >= 2:
        case = "i"
    elif singletons and len(compounds) >= 2:
        case = "ii"
    elif len(compounds) >= 4:
        case = "iii"
    else:
        notes.append("no case of the trichotomy applies")
    if spikes:
        notes.append(f"{len(spikes)} spikes pruned before counting")
    logger.debug("strips: %d singleton, %d compound, case %s", len(singletons), len(compounds), case)
    return StripReport(
        spikes=spikes,
        interior_degrees=degrees,
        simple_boundary_regions=simple,
        singleton_strips=singletons,
        compound_strips=compounds,
        c4=c4,
        t4=t4,
        case=case,
        notes=tuple(notes),
    )


def _alternating_run(word: Word) -> bool:
    return all(
        generator_of(word[k]) != generator_of(word[k + 1]) for k in range(len(word) - 1)
    )


def separating_vertices(d: PlanarDiagram, region_id: str) -> SeparatingVertices:
    """
    Vertices splitting a dihedral relator region into its two halves.

    :param d: diagram.
    :param region_id: region labeled by a cyclic shift of p(a, b) p(b, a)^-1
        or of its inverse.
    :raises UnknownElementError: for an unknown region.
    :raises NotDihedralRelatorError: when the label has another form.
    :return: start vertices of the positive and of the negative half.
    """
    region = d.region_map.get(region_id)
    if region is None:
        raise UnknownElementError(f"unknown region {region_id!r}")
    label = region_label(d, region)
    size = len(label)
    signs = [is_positive(letter) for letter in label]
    starts = [k for k in range(size) if signs[k] != signs[k - 1]]
    half = size // 2
    if size < 4 or size % 2 or len(starts) != 2 or (starts[1] - starts[0]) % size != half:
        raise NotDihedralRelatorError(f"label {format_word(label)} is not a dihedral relator")
    for start in starts:
        run = tuple(label[(start + k) % size] for k in range(half))
        if not _alternating_run(run):
            raise NotDihedralRelatorError(f"label {format_word(label)} is not a dihedral relator")
    positive = next(start for start in starts if signs[start])
    negative = next(start for start in starts if not signs[start])
    positive_vertex = d.start(region.boundary[positive])
    negative_vertex = d.start(region.boundary[negative])
    exposed = positive_vertex in d.boundary_vertices and negative_vertex in d.boundary_vertices
    return SeparatingVertices(
        region=region_id,
        positive_start=positive_vertex,
        negative_start=negative_vertex,
        exposed=exposed,
    )


def square_grid_diagram(rows: int, cols: int) -> PlanarDiagram:
    """
    Grid of commutator squares abAB.

    Vertex ``g{i}{j}`` sits at column i, row j; ``h`` edges read ``a``
    to the right, ``v`` edges read ``b`` upwards.

    :param rows: number of square rows.
    :param cols: number of square columns.
    :return: diagram with boundary a^cols b^rows A^cols B^rows.
    """
    vertices = tuple(f"g{i}{j}" for j in range(rows + 1) for i in range(cols + 1))
    edges = []
    for j in range(rows + 1):
        for i in range(cols):
            edges.append(DiagramEdge(id=f"h{i}{j}", tail=f"g{i}{j}", head=f"g{i + 1}{j}", letter="a"))
    for j in range(rows):
        for i in range(cols + 1):
            edges.append(DiagramEdge(id=f"v{i}{j}", tail=f"g{i}{j}", head=f"g{i}{j + 1}", letter="b"))
    regions = tuple(
        Region(
            id=f"s{i}{j}",
            boundary=(
                EdgeRef(f"h{i}{j}", True),
                EdgeRef(f"v{i + 1}{j}", True),
                EdgeRef(f"h{i}{j + 1}", False),
                EdgeRef(f"v{i}{j}", False),
            ),
        )
        for j in range(rows)
        for i in range(cols)
    )
    boundary = (
        [EdgeRef(f"h{i}0", True) for i in range(cols)]
        + [EdgeRef(f"v{cols}{j}", True) for j in range(rows)]
        + [EdgeRef(f"h{i}{rows}", False) for i in reversed(range(cols))]
        + [EdgeRef(f"v0{j}", False) for j in reversed(range(rows))]
    )
    return PlanarDiagram(vertices=vertices, edges=tuple(edges), regions=regions, boundary=tuple(boundary))


def diagram_to_complex(d: PlanarDiagram) -> ComplexSpec:
    """
    Regions as faces with unit edges; regular even polygons get a Gon tag.

    :param d: diagram.
    :return: complex with the diagram's ids.
    """
    faces = []
    for region in d.regions:
        size = len(region.boundary)
        tagged = size % 2 == 0 and size // 2 in SUPPORTED_HALF_SIDES
        faces.append(
            Face(
                id=region.id,
                boundary=region.boundary,
                shape=f"Gon({size})" if tagged else None,
                sides=tuple(range(size)) if tagged else None,
            ),
        )
    return ComplexSpec(
        vertices=d.vertices,
        edges=tuple(Edge(id=edge.id, tail=edge.tail, head=edge.head, length=ONE) for edge in d.edges),
        faces=tuple(faces),
    )
