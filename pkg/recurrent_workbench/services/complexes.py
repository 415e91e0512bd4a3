"""
Validation and surgery of finite polygonal 2-complexes.

Every operation returns a new ComplexSpec; inputs are never modified.
"""
import itertools
import logging
from collections import Counter
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import networkx as nx
import sympy

from recurrent_workbench.exceptions import (
    CollapseConfluenceError,
    ComplexValidationError,
    SphereConingError,
    SubdivisionError,
    UnknownElementError,
    UnknownShapeError,
)
from recurrent_workbench.models.complex import (
    ComplexClass,
    ComplexSpec,
    Edge,
    EdgeRef,
    Face,
    GalleryComponent,
    GalleryKind,
    WiseComplex,
)
from recurrent_workbench.services.quadratic import (
    ONE,
    SQRT2,
    SQRT3,
    ZERO,
    QuadNumber,
)
from recurrent_workbench.services.shapes import catalog

logger = logging.getLogger(__name__)

HALF = QuadNumber(Fraction(1, 2))


def complex_violations(c: ComplexSpec) -> list[tuple[str, str]]:  # noqa: C901
    """
    Structural violations of an unchecked complex.

    :param c: complex as read, ids possibly repeated or dangling.
    :return: (location, message) pairs, located by list position.
    """
    violations: list[tuple[str, str]] = []
    _check_unique("vertices", c.vertices, violations)
    _check_unique("edges", [edge.id for edge in c.edges], violations)
    _check_unique("faces", [face.id for face in c.faces], violations)
    known_vertices = set(c.vertices)
    for index, edge in enumerate(c.edges):
        for end in (edge.tail, edge.head):
            if end not in known_vertices:
                violations.append((f"edges.{index}.ends", f"unknown vertex {end!r}"))
        if edge.length <= ZERO:
            violations.append((f"edges.{index}.length", "length must be positive"))

    edge_map = c.edge_map
    for index, face in enumerate(c.faces):
        location = f"faces.{index}"
        if not face.boundary:
            violations.append((f"{location}.boundary", "empty face boundary"))
            continue
        dangling = [position for position, ref in enumerate(face.boundary) if ref.edge not in edge_map]
        for position in dangling:
            violations.append(
                (f"{location}.boundary.{position}", f"dangling edge reference {face.boundary[position].edge!r}"),
            )
        if dangling:
            continue
        for position, ref in enumerate(face.boundary):
            following = face.boundary[(position + 1) % face.size]
            if _end(edge_map[ref.edge], ref) != _start(edge_map[following.edge], following):
                violations.append((f"{location}.boundary.{position}", "open face boundary"))
        violations.extend(_shape_violations(face, edge_map, location))
    return violations


def validate_complex(c: ComplexSpec, violations: Sequence[tuple[str, str]] = ()) -> ComplexSpec:
    """
    Check a complex assembled from a file description.

    :param c: unchecked complex.
    :param violations: violations already found while reading it.
    :raises ComplexValidationError: listing every violation with its location.
    :return: the complex, shaped faces given their default side map.
    """
    found = list(violations) + complex_violations(c)
    if found:
        raise ComplexValidationError(found)
    faces = tuple(
        Face(id=face.id, boundary=face.boundary, shape=face.shape, sides=tuple(range(face.size)))
        if face.shape is not None and face.sides is None
        else face
        for face in c.faces
    )
    return ComplexSpec(vertices=c.vertices, edges=c.edges, faces=faces)


def _check_unique(location: str, ids: Sequence[str], violations: list[tuple[str, str]]) -> None:
    seen: set[str] = set()
    for index, name in enumerate(ids):
        if name in seen:
            violations.append((f"{location}.{index}", f"duplicate id {name!r}"))
        seen.add(name)


def _start(edge: Edge, ref: EdgeRef) -> str:
    return edge.tail if ref.forward else edge.head


def _end(edge: Edge, ref: EdgeRef) -> str:
    return edge.head if ref.forward else edge.tail


def _shape_violations(face: Face, edge_map: dict[str, Edge], location: str) -> list[tuple[str, str]]:
    if face.shape is None:
        if face.sides is not None:
            return [(f"{location}.sides", "sides without shape")]
        return []
    try:
        shape = catalog.resolve(face.shape)
    except UnknownShapeError as exc:
        return [(f"{location}.shape", exc.detail)]
    if shape.side_count != face.size:
        return [(f"{location}.shape", "shape/side-count mismatch")]
    sides = face.sides if face.sides is not None else tuple(range(face.size))
    if not _is_dihedral_map(sides, face.size):
        return [(f"{location}.sides", "malformed orientation")]
    ratio: Optional[QuadNumber] = None
    for position, ref in enumerate(face.boundary):
        scale = edge_map[ref.edge].length / shape.lengths[sides[position]]
        if ratio is None:
            ratio = scale
        elif scale != ratio:
            return [(f"{location}.boundary.{position}", "side-length mismatch")]
    return []


def _is_dihedral_map(sides: Sequence[int], size: int) -> bool:
    if len(sides) != size or sorted(sides) != list(range(size)):
        return False
    for direction in (1, -1):
        if all(sides[k] == (sides[0] + direction * k) % size for k in range(size)):
            return True
    return False


def face_scale(c: ComplexSpec, face: Face) -> QuadNumber:
    """
    Similarity factor between a tagged face and its catalog shape.

    :param c: complex.
    :param face: face with a shape tag.
    :return: edge length over shape side length.
    """
    if face.shape is None or face.sides is None:
        raise UnknownShapeError(f"face {face.id!r} has no shape tag")
    shape = catalog.resolve(face.shape)
    first = face.boundary[0]
    return c.edge_map[first.edge].length / shape.lengths[face.sides[0]]


def edge_degree(c: ComplexSpec, edge: str) -> int:
    """
    Number of face-boundary traversals of an edge.

    :param c: complex.
    :param edge: edge id.
    :raises UnknownElementError: for an unknown edge.
    :return: degree, counting a face twice when it traverses the edge twice.
    """
    if edge not in c.edge_map:
        raise UnknownElementError(f"unknown edge {edge!r}")
    return len(c.traversals[edge])


def degrees(c: ComplexSpec) -> dict[str, int]:
    return {edge.id: len(c.traversals[edge.id]) for edge in c.edges}


def skeleton_graph(c: ComplexSpec) -> nx.MultiGraph:
    """1-skeleton as a multigraph keyed by edge id."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(c.vertices)
    for edge in c.edges:
        graph.add_edge(edge.tail, edge.head, key=edge.id)
    return graph


def classify_complex(c: ComplexSpec) -> ComplexClass:
    """
    Essential / thick classification.

    :param c: complex.
    :return: thick, essential or not-essential.
    """
    degree_of = degrees(c)
    isolated = any(skeleton_graph(c).degree(vertex) == 0 for vertex in c.vertices)
    if isolated or any(degree < 2 for degree in degree_of.values()):
        return ComplexClass.NOT_ESSENTIAL
    if any(degree >= 3 for degree in degree_of.values()):
        return ComplexClass.THICK
    return ComplexClass.ESSENTIAL


def euler_characteristic(c: ComplexSpec) -> int:
    return len(c.vertices) - len(c.edges) + len(c.faces)


def homology_ranks(c: ComplexSpec) -> tuple[int, int]:
    """
    Rational Betti numbers b0 and b1.

    :param c: complex.
    :return: (b0, b1).
    """
    b0 = nx.number_connected_components(skeleton_graph(c)) if c.vertices else 0
    rank = 0
    if c.faces and c.edges:
        row = {edge.id: index for index, edge in enumerate(c.edges)}
        matrix = sympy.zeros(len(c.edges), len(c.faces))
        for column, face in enumerate(c.faces):
            for ref in face.boundary:
                matrix[row[ref.edge], column] += 1 if ref.forward else -1
        rank = matrix.rank()
    b1 = len(c.edges) - (len(c.vertices) - b0) - rank
    return b0, b1


def _collapse_once(c: ComplexSpec, descending: bool) -> ComplexSpec:
    faces = {face.id: face for face in c.faces}
    edges = {edge.id: edge for edge in c.edges}
    while True:
        uses: Counter[str] = Counter()
        owner: dict[str, str] = {}
        for face in faces.values():
            for ref in face.boundary:
                uses[ref.edge] += 1
                owner[ref.edge] = face.id
        free = sorted((edge for edge, count in uses.items() if count == 1), reverse=descending)
        if not free:
            break
        edge = free[0]
        del faces[owner[edge]]
        del edges[edge]
    return ComplexSpec(
        vertices=c.vertices,
        edges=tuple(edge for edge in c.edges if edge.id in edges),
        faces=tuple(face for face in c.faces if face.id in faces),
    )


def collapse_free_edges(c: ComplexSpec) -> ComplexSpec:
    """
    Remove faces with a free edge, together with that edge, until none is left.

    Free edges are taken in ascending id order; the run is repeated in
    descending order and both must leave the same faces.

    :param c: complex.
    :raises CollapseConfluenceError: when the two orders disagree.
    :return: collapsed complex.
    """
    ascending = _collapse_once(c, descending=False)
    descending = _collapse_once(c, descending=True)
    same_faces = {face.id for face in ascending.faces} == {face.id for face in descending.faces}
    if not same_faces or euler_characteristic(ascending) != euler_characteristic(descending):
        raise CollapseConfluenceError("collapse orders disagree")
    if {edge.id for edge in ascending.edges} != {edge.id for edge in descending.edges}:
        logger.warning("collapse orders removed different edges, faces agree")
    logger.debug("collapse removed %d faces", len(c.faces) - len(ascending.faces))
    return ascending


def vertex_link(c: ComplexSpec, vertex: str, faces: Optional[Iterable[Face]] = None) -> nx.MultiGraph:
    """
    Link of a vertex: one node per edge end, one link edge per face corner.

    :param c: complex.
    :param vertex: vertex id.
    :param faces: faces to use, all faces by default.
    :return: link multigraph.
    """
    link = nx.MultiGraph()
    for edge in c.edges:
        if edge.tail == vertex:
            link.add_node((edge.id, "tail"))
        if edge.head == vertex:
            link.add_node((edge.id, "head"))
    for face in c.faces if faces is None else faces:
        size = face.size
        for position, outgoing in enumerate(face.boundary):
            if c.start(outgoing) != vertex:
                continue
            incoming = face.boundary[(position - 1) % size]
            arriving = (incoming.edge, "head" if incoming.forward else "tail")
            leaving = (outgoing.edge, "tail" if outgoing.forward else "head")
            link.add_edge(arriving, leaving, key=f"{face.id}#{position}")
    return link


def _link_shape(link: nx.MultiGraph) -> str:
    if link.number_of_nodes() == 0 or not nx.is_connected(link):
        return "other"
    degree_values = [degree for _, degree in link.degree()]
    if all(degree == 2 for degree in degree_values):
        return "circle"
    if max(degree_values) <= 2 and link.number_of_edges() == link.number_of_nodes() - 1:
        return "arc"
    return "other"


def gallery_components(c: ComplexSpec) -> list[GalleryComponent]:
    """
    Partition faces into classes of faces adjacent along edges.

    :param c: complex.
    :return: components ordered by least face id.
    """
    adjacency = nx.Graph()
    adjacency.add_nodes_from(face.id for face in c.faces)
    for uses in c.traversals.values():
        for (first, _), (second, _) in zip(uses, uses[1:]):
            adjacency.add_edge(first, second)
    components = []
    for face_ids in nx.connected_components(adjacency):
        components.append(_classify_component(c, frozenset(face_ids)))
    return sorted(components, key=lambda component: component.least_face)


def _classify_component(c: ComplexSpec, face_ids: frozenset[str]) -> GalleryComponent:
    faces = [face for face in c.faces if face.id in face_ids]
    uses: Counter[str] = Counter(ref.edge for face in faces for ref in face.boundary)
    vertices = frozenset(vertex for face in faces for vertex in c.face_vertices(face))
    euler = len(vertices) - len(uses) + len(faces)
    boundary = frozenset(edge for edge, count in uses.items() if count == 1)
    if any(count > 2 for count in uses.values()):
        kind = GalleryKind.NOT_PSEUDOMANIFOLD
    else:
        closed = not boundary
        allowed = {"circle"} if closed else {"circle", "arc"}
        restricted = ComplexSpec(
            vertices=tuple(sorted(vertices)),
            edges=tuple(edge for edge in c.edges if edge.id in uses),
            faces=tuple(faces),
        )
        links_ok = all(
            _link_shape(vertex_link(restricted, vertex)) in allowed for vertex in vertices
        )
        if not links_ok:
            kind = GalleryKind.PSEUDOMANIFOLD_NONSURFACE
        elif closed:
            kind = GalleryKind.SPHERE if euler == 2 else GalleryKind.CLOSED_SURFACE
        else:
            kind = GalleryKind.DISK if euler == 1 else GalleryKind.SURFACE_WITH_BOUNDARY
    return GalleryComponent(
        faces=face_ids,
        edges=frozenset(uses),
        boundary_edges=boundary,
        vertices=vertices,
        euler_characteristic=euler,
        kind=kind,
    )


def cone_off_spheres(c: ComplexSpec) -> ComplexSpec:
    """
    Replace every sphere component by a cone on its vertex set.

    :param c: complex.
    :raises SphereConingError: when a sphere edge is used outside its component.
    :return: complex with one apex per sphere and no sphere faces.
    """
    spheres = [comp for comp in gallery_components(c) if comp.kind == GalleryKind.SPHERE]
    if not spheres:
        return c
    removed_faces: set[str] = set()
    removed_edges: set[str] = set()
    apexes: list[str] = []
    cone_edges: list[Edge] = []
    for sphere in spheres:
        for edge in sorted(sphere.edges):
            if edge_degree(c, edge) != 2:
                raise SphereConingError(f"sphere not coning-eligible: edge {edge!r}")
        apex = f"{sphere.least_face}:apex"
        apexes.append(apex)
        cone_edges.extend(
            Edge(id=f"{apex}-{vertex}", tail=apex, head=vertex, length=ONE)
            for vertex in sorted(sphere.vertices)
        )
        removed_faces |= sphere.faces
        removed_edges |= sphere.edges
    logger.info("coned off %d sphere components", len(spheres))
    return ComplexSpec(
        vertices=c.vertices + tuple(apexes),
        edges=tuple(edge for edge in c.edges if edge.id not in removed_edges) + tuple(cone_edges),
        faces=tuple(face for face in c.faces if face.id not in removed_faces),
    )


def _barycentric_metric(c: ComplexSpec, face: Face) -> Optional[tuple[str, tuple[int, ...], QuadNumber, QuadNumber]]:
    """Child shape, child sides, corner spoke and midpoint spoke lengths."""
    if face.shape is None:
        return None
    size = face_scale(c, face)
    if face.shape == "Equilateral":
        return "TriH236", (0, 1, 2), size * SQRT3 / 3, size * SQRT3 / 6
    if face.shape in {"Gon(4)", "UnitSquare"}:
        return "TriQ244", (0, 1, 2), size * SQRT2 / 2, size * HALF
    if face.shape == "Gon(6)":
        return "TriH236", (2, 1, 0), size, size * SQRT3 / 2
    return None


def _barycentric(c: ComplexSpec) -> ComplexSpec:
    vertices = list(c.vertices)
    edges: list[Edge] = []
    for edge in c.edges:
        middle = f"{edge.id}:m"
        vertices.append(middle)
        half = edge.length * HALF
        edges.append(Edge(id=f"{edge.id}:0", tail=edge.tail, head=middle, length=half))
        edges.append(Edge(id=f"{edge.id}:1", tail=middle, head=edge.head, length=half))
    faces: list[Face] = []
    for face in c.faces:
        center = f"{face.id}:c"
        vertices.append(center)
        metric = _barycentric_metric(c, face)
        corner_length, middle_length = (ONE, ONE) if metric is None else metric[2:]
        corners = c.face_vertices(face)
        for position, ref in enumerate(face.boundary):
            edges.append(
                Edge(id=f"{face.id}:v{position}", tail=corners[position], head=center, length=corner_length),
            )
            edges.append(
                Edge(id=f"{face.id}:m{position}", tail=f"{ref.edge}:m", head=center, length=middle_length),
            )
        size = face.size
        for position, ref in enumerate(face.boundary):
            toward_start = EdgeRef(f"{ref.edge}:0", False) if ref.forward else EdgeRef(f"{ref.edge}:1", True)
            toward_end = EdgeRef(f"{ref.edge}:1", True) if ref.forward else EdgeRef(f"{ref.edge}:0", False)
            spoke_in = EdgeRef(f"{face.id}:m{position}", False)
            shape, sides = (None, None) if metric is None else metric[:2]
            faces.append(
                Face(
                    id=f"{face.id}:a{position}",
                    boundary=(toward_start, EdgeRef(f"{face.id}:v{position}", True), spoke_in),
                    shape=shape,
                    sides=sides,
                ),
            )
            faces.append(
                Face(
                    id=f"{face.id}:b{position}",
                    boundary=(toward_end, EdgeRef(f"{face.id}:v{(position + 1) % size}", True), spoke_in),
                    shape=shape,
                    sides=sides,
                ),
            )
    return ComplexSpec(vertices=tuple(vertices), edges=tuple(edges), faces=tuple(faces))


# altitude foot position along the hypotenuse, measured from its start
_FOOT = {"TriQ244": HALF, "TriH236": QuadNumber(Fraction(3, 4))}


def _corner_ids(c: ComplexSpec, face: Face) -> dict[int, str]:
    """Complex vertex glued to each shape vertex."""
    assert face.sides is not None
    corners: dict[int, str] = {}
    for position, ref in enumerate(face.boundary):
        side = face.sides[position]
        start_corner = side if face.orientation == 1 else (side + 1) % face.size
        corners[start_corner] = c.start(ref)
    return corners


def _side_refs(face: Face) -> dict[int, tuple[EdgeRef, bool]]:
    """Edge glued to each shape side, with whether the edge runs along the side."""
    assert face.sides is not None
    found = {}
    for position, ref in enumerate(face.boundary):
        aligned = ref.forward == (face.orientation == 1)
        found[face.sides[position]] = (ref, aligned)
    return found


def _altitude(c: ComplexSpec) -> ComplexSpec:  # noqa: C901
    feet: dict[str, QuadNumber] = {}
    leg_edges: set[str] = set()
    for face in c.faces:
        if face.shape not in _FOOT or face.sides is None:
            raise SubdivisionError(f"altitude mode needs right triangles, face {face.id!r} is not one")
        hypotenuse, aligned = _side_refs(face)[1]
        foot = _FOOT[face.shape] if aligned else ONE - _FOOT[face.shape]
        if feet.setdefault(hypotenuse.edge, foot) != foot:
            raise SubdivisionError(f"altitude feet disagree on edge {hypotenuse.edge!r}")
        leg_edges.update(_side_refs(face)[side][0].edge for side in (0, 2))
    shared = leg_edges & set(feet)
    if shared:
        raise SubdivisionError(f"edge {min(shared)!r} is a hypotenuse in one face and a leg in another")

    vertices = list(c.vertices)
    edges: list[Edge] = []
    for edge in c.edges:
        if edge.id not in feet:
            edges.append(edge)
            continue
        foot_vertex = f"{edge.id}:f"
        vertices.append(foot_vertex)
        where = feet[edge.id]
        edges.append(Edge(id=f"{edge.id}:0", tail=edge.tail, head=foot_vertex, length=edge.length * where))
        edges.append(Edge(id=f"{edge.id}:1", tail=foot_vertex, head=edge.head, length=edge.length * (ONE - where)))

    faces: list[Face] = []
    for face in c.faces:
        assert face.shape is not None
        size = face_scale(c, face)
        corners = _corner_ids(c, face)
        refs = _side_refs(face)
        hyp_ref, hyp_aligned = refs[1]
        leg0, aligned0 = refs[0]
        leg2, aligned2 = refs[2]
        altitude = f"{face.id}:alt"
        if face.shape == "TriQ244":
            altitude_length = size * SQRT2 / 2
        else:
            altitude_length = size / 4
        foot = f"{hyp_ref.edge}:f"
        edges.append(Edge(id=altitude, tail=foot, head=corners[0], length=altitude_length))
        foot_to_p1 = EdgeRef(f"{hyp_ref.edge}:0", False) if hyp_aligned else EdgeRef(f"{hyp_ref.edge}:1", True)
        foot_to_p2 = EdgeRef(f"{hyp_ref.edge}:1", True) if hyp_aligned else EdgeRef(f"{hyp_ref.edge}:0", False)
        p1_to_p0 = EdgeRef(leg0.edge, not aligned0)
        p2_to_p0 = EdgeRef(leg2.edge, aligned2)
        first = (foot_to_p1, p1_to_p0, EdgeRef(altitude, False))
        if face.shape == "TriQ244":
            second = (foot_to_p2, p2_to_p0, EdgeRef(altitude, False))
        else:
            second = (EdgeRef(altitude, True), p2_to_p0.reversed(), foot_to_p2.reversed())
        for suffix, boundary in (("0", first), ("1", second)):
            faces.append(Face(id=f"{face.id}:{suffix}", boundary=boundary, shape=face.shape, sides=(0, 1, 2)))
    return ComplexSpec(vertices=tuple(vertices), edges=tuple(edges), faces=tuple(faces))


def subdivide(c: ComplexSpec, mode: str) -> ComplexSpec:
    """
    Barycentric or altitude subdivision.

    :param c: complex.
    :param mode: "barycentric" or "altitude".
    :raises SubdivisionError: for unknown modes or faces the mode cannot split.
    :return: subdivided complex with the same Euler characteristic.
    """
    if mode == "barycentric":
        result = _barycentric(c)
    elif mode == "altitude":
        result = _altitude(c)
    else:
        raise SubdivisionError(f"unknown subdivision mode {mode!r}")
    logger.debug("%s subdivision: %d faces -> %d faces", mode, len(c.faces), len(result.faces))
    return result


def wise_complex(c: ComplexSpec) -> WiseComplex:
    """
    Nerve of the covering by closed 2-cells, up to dimension 2.

    Edges of degree 0 first receive a 2-cell each.

    :param c: complex.
    :return: nerve.
    """
    degree_of = degrees(c)
    attached = []
    cells: dict[str, frozenset[str]] = {}
    for face in c.faces:
        cells[face.id] = frozenset(c.face_vertices(face))
    for edge in c.edges:
        if degree_of[edge.id] == 0:
            name = f"{edge.id}:cell"
            attached.append(name)
            cells[name] = frozenset((edge.tail, edge.head))
    names = sorted(cells)
    nerve_edges = tuple(
        (first, second)
        for first, second in itertools.combinations(names, 2)
        if cells[first] & cells[second]
    )
    triangles = tuple(
        (first, second, third)
        for first, second, third in itertools.combinations(names, 3)
        if cells[first] & cells[second] & cells[third]
    )
    return WiseComplex(
        vertices=tuple(names),
        edges=nerve_edges,
        triangles=triangles,
        attached=tuple(attached),
    )


def disjoint_union(first: ComplexSpec, second: ComplexSpec, prefix: str) -> ComplexSpec:
    """
    Union of two complexes, renaming every id of the second one.

    :param first: complex kept as is.
    :param second: complex whose ids get ``prefix``.
    :param prefix: id prefix.
    :return: union.
    """
    renamed_edges = tuple(
        Edge(id=prefix + edge.id, tail=prefix + edge.tail, head=prefix + edge.head, length=edge.length)
        for edge in second.edges
    )
    renamed_faces = tuple(
        Face(
            id=prefix + face.id,
            boundary=tuple(EdgeRef(prefix + ref.edge, ref.forward) for ref in face.boundary),
            shape=face.shape,
            sides=face.sides,
        )
        for face in second.faces
    )
    return ComplexSpec(
        vertices=first.vertices + tuple(prefix + vertex for vertex in second.vertices),
        edges=first.edges + renamed_edges,
        faces=first.faces + renamed_faces,
    )


def check_closed_path(c: ComplexSpec, path: Sequence[EdgeRef]) -> None:
    """
    Require a closed edge path of known edges.

    :param c: complex.
    :param path: directed edges.
    :raises UnknownElementError: for unknown edges or an open path.
    """
    for ref in path:
        if ref.edge not in c.edge_map:
            raise UnknownElementError(f"unknown edge {ref.edge!r}")
    for position, ref in enumerate(path):
        following = path[(position + 1) % len(path)]
        if c.end(ref) != c.start(following):
            raise UnknownElementError(f"path is not closed at step {position}")


def attach_annulus(c: ComplexSpec, path: Sequence[EdgeRef]) -> tuple[ComplexSpec, tuple[EdgeRef, ...]]:
    """
    Glue a triangulated annulus along a closed path.

    The far side of the annulus is a copy of the path on fresh vertices,
    so it is embedded even when the path is not.

    :param c: complex.
    :param path: closed edge path.
    :return: enlarged complex and the copied path.
    """
    check_closed_path(c, path)
    size = len(path)
    starts = [c.start(ref) for ref in path]
    copies = [f"ann:{index}" for index in range(size)]
    edges = list(c.edges)
    faces = list(c.faces)
    for index, ref in enumerate(path):
        following = (index + 1) % size
        edges.append(Edge(id=f"ann:c{index}", tail=copies[index], head=copies[following], length=c.edge_map[ref.edge].length))
        edges.append(Edge(id=f"ann:r{index}", tail=starts[index], head=copies[index], length=ONE))
        edges.append(Edge(id=f"ann:d{index}", tail=starts[index], head=copies[following], length=ONE))
    for index, ref in enumerate(path):
        following = (index + 1) % size
        faces.append(
            Face(
                id=f"ann:t{index}",
                boundary=(ref.reversed(), EdgeRef(f"ann:d{index}", True), EdgeRef(f"ann:r{following}", False)),
            ),
        )
        faces.append(
            Face(
                id=f"ann:u{index}",
                boundary=(EdgeRef(f"ann:c{index}", True), EdgeRef(f"ann:d{index}", False), EdgeRef(f"ann:r{index}", True)),
            ),
        )
    annulus = ComplexSpec(vertices=c.vertices + tuple(copies), edges=tuple(edges), faces=tuple(faces))
    return annulus, tuple(EdgeRef(f"ann:c{index}", True) for index in range(size))


def max_scalar_bits(c: ComplexSpec) -> int:
    return max((edge.length.bit_size() for edge in c.edges), default=0)
