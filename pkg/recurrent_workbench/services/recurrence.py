"""
Direction sets over shaped complexes and their transition digraph.

A token is a model anchor of a face pushed through the face's side
correspondence. I follows the chord across the face, H continues a
direction straight into the other faces at the same edge point.
"""
import logging
from fractions import Fraction
from typing import Optional

import networkx as nx

from recurrent_workbench.exceptions import (
    ConditionViolatedError,
    NotRecurrentError,
    UnknownElementError,
    UnknownShapeError,
    VertexHitError,
)
from recurrent_workbench.models.complex import ComplexSpec, Face
from recurrent_workbench.models.recurrence import (
    ConditionVerdict,
    DirectionToken,
    RecurrenceReport,
    TransitionDigraph,
)
from recurrent_workbench.models.shapes import DirectionAnchor, ShapeTemplate
from recurrent_workbench.services.complexes import edge_degree, homology_ranks
from recurrent_workbench.services.planar import Vec, add, dot, neg, scale
from recurrent_workbench.services.quadratic import ONE
from recurrent_workbench.services.shapes import catalog, chord

logger = logging.getLogger(__name__)


def _shape_of(face: Face) -> ShapeTemplate:
    if face.shape is None or face.sides is None:
        raise UnknownShapeError(f"face {face.id!r} has no shape tag")
    return catalog.resolve(face.shape)


def _aligned(face: Face, forward: bool) -> bool:
    """Whether the edge runs along its shape side in counterclockwise sense."""
    return forward == (face.orientation == 1)


def _edge_unit(shape: ShapeTemplate, side: int, aligned: bool) -> Vec:
    unit = shape.side_unit(side)
    return unit if aligned else neg(unit)


def anchor_to_token(c: ComplexSpec, face: Face, anchor: DirectionAnchor) -> DirectionToken:
    """
    Express a model anchor of a face as a token.

    :param c: complex.
    :param face: tagged face.
    :param anchor: anchor of the face's shape.
    :return: token on the edge glued to the anchor's side.
    """
    shape = _shape_of(face)
    assert face.sides is not None
    position = face.sides.index(anchor.side)
    ref = face.boundary[position]
    aligned = _aligned(face, ref.forward)
    along = _edge_unit(shape, anchor.side, aligned)
    return DirectionToken(
        face=face.id,
        position=position,
        edge=ref.edge,
        forward=ref.forward,
        t=anchor.t if aligned else ONE - anchor.t,
        alpha=dot(anchor.direction, along),
        beta=dot(anchor.direction, shape.inward_normal(anchor.side)),
    )


def token_to_anchor(c: ComplexSpec, token: DirectionToken) -> tuple[ShapeTemplate, DirectionAnchor]:
    """
    Shape coordinates of a token.

    :param c: complex.
    :param token: token.
    :raises UnknownElementError: when the token does not sit on its face.
    :return: the face's shape and the anchor in it.
    """
    face = c.face_map.get(token.face)
    if face is None or not 0 <= token.position < face.size:
        raise UnknownElementError(f"token {token.label()} is not on a face boundary")
    if face.boundary[token.position].edge != token.edge:
        raise UnknownElementError(f"token {token.label()} names the wrong edge")
    shape = _shape_of(face)
    assert face.sides is not None
    side = face.sides[token.position]
    aligned = _aligned(face, token.forward)
    along = _edge_unit(shape, side, aligned)
    direction = add(scale(token.alpha, along), scale(token.beta, shape.inward_normal(side)))
    return shape, DirectionAnchor(side=side, t=token.t if aligned else ONE - token.t, direction=direction)


def instantiate_directions(c: ComplexSpec) -> list[DirectionToken]:
    """
    Direction set of a shaped complex.

    :param c: complex whose faces all carry shape tags.
    :raises UnknownShapeError: for an untagged face.
    :return: tokens sorted by face, position, t and direction.
    """
    tokens = []
    for face in c.faces:
        shape = _shape_of(face)
        tokens.extend(anchor_to_token(c, face, anchor) for anchor in shape.anchors)
    return sorted(tokens, key=DirectionToken.sort_key)


def involution_of(c: ComplexSpec, a: DirectionToken) -> DirectionToken:
    """
    Token at the far end of the chord from ``a``, pointing back.

    :param c: complex.
    :param a: token.
    :raises VertexHitError: when the chord ends at a vertex.
    :return: I(a).
    """
    shape, anchor = token_to_anchor(c, a)
    segment = chord(shape, anchor)
    return anchor_to_token(c, c.face_map[a.face], segment.end)


def continuations_of(c: ComplexSpec, a: DirectionToken) -> list[DirectionToken]:
    """
    Straight continuations of ``a`` into the other traversals of its edge.

    :param c: complex.
    :param a: token.
    :return: H(a), one token per other traversal, sorted.
    """
    found = []
    for face_id, position in c.traversals[a.edge]:
        if (face_id, position) == (a.face, a.position):
            continue
        ref = c.face_map[face_id].boundary[position]
        found.append(
            DirectionToken(
                face=face_id,
                position=position,
                edge=a.edge,
                forward=ref.forward,
                t=a.t,
                alpha=-a.alpha,
                beta=a.beta,
            ),
        )
    return sorted(found, key=DirectionToken.sort_key)


def build_markov(c: ComplexSpec) -> TransitionDigraph:
    """
    Transition digraph: a -> b for b in H(I(a)) with p = 1/(deg - 1).

    :param c: complex satisfying the closure conditions (ii) and (iii).
    :raises ConditionViolatedError: when I or H leaves the direction set.
    :return: digraph; tokens whose chord lands on a free edge are dead ends.
    """
    nodes = tuple(instantiate_directions(c))
    index = {token: position for position, token in enumerate(nodes)}
    involution = []
    for token in nodes:
        try:
            image = involution_of(c, token)
        except VertexHitError as exc:
            raise ConditionViolatedError(f"condition (iii) violated at {token.label()}: {exc.detail}") from exc
        if image not in index:
            raise ConditionViolatedError(f"condition (iii) violated at {token.label()}")
        involution.append(index[image])
    arcs: list[tuple[int, int, Fraction]] = []
    dead_ends = []
    for source in range(len(nodes)):
        crossing = nodes[involution[source]]
        following = continuations_of(c, crossing)
        if not following:
            dead_ends.append(source)
            continue
        probability = Fraction(1, edge_degree(c, crossing.edge) - 1)
        for target in following:
            if target not in index:
                raise ConditionViolatedError(f"condition (ii) violated at {crossing.label()}")
            arcs.append((source, index[target], probability))
    logger.debug("transition digraph: %d nodes, %d arcs, %d dead ends", len(nodes), len(arcs), len(dead_ends))
    return TransitionDigraph(
        nodes=nodes,
        arcs=tuple(arcs),
        involution=tuple(involution),
        dead_ends=tuple(dead_ends),
    )


def check_stationary_uniform(d: TransitionDigraph) -> tuple[bool, Optional[DirectionToken]]:
    """
    Check that the uniform measure is stationary.

    :param d: digraph.
    :return: (True, None) when every column and row sums to 1, otherwise
        (False, a token whose column or row sum differs from 1).
    """
    for sums in (d.column_sums, d.row_sums):
        for position, total in enumerate(sums):
            if total != 1:
                return False, d.nodes[position]
    return True, None


def find_recurrent_cycle(d: TransitionDigraph, a: DirectionToken, b: DirectionToken) -> list[DirectionToken]:
    """
    Shortest closed token path starting with the arc I(a) -> b.

    Ties between equally short paths go to the least token at each step.

    :param d: digraph.
    :param a: token.
    :param b: continuation of ``a``.
    :raises NotRecurrentError: when no cycle runs through the arc.
    :return: [I(a), b, ..., I(a)].
    """
    if a not in d.index or b not in d.index:
        raise UnknownElementError("tokens are not nodes of the digraph")
    start = d.involution[d.index[a]]
    first = d.index[b]
    if not d.graph.has_edge(start, first):
        raise NotRecurrentError(f"not recurrent: no arc from I({a.label()}) to {b.label()}")
    distance = nx.single_source_shortest_path_length(d.graph.reverse(copy=False), start)
    if first not in distance:
        raise NotRecurrentError(f"not recurrent: {b.label()} never returns")
    path = [start, first]
    current = first
    while current != start or len(path) == 1:
        steps = [
            target
            for target in d.graph.successors(current)
            if distance.get(target) == distance[current] - 1
        ]
        current = min(steps, key=lambda target: d.nodes[target].sort_key())
        path.append(current)
    return [d.nodes[position] for position in path]


def returning_paths_brute_force(d: TransitionDigraph, limit: int) -> bool:
    """
    Look for a0, ..., an with n <= limit and a0 = an or a0 = I(an).

    Expands the set of tokens reached after each number of steps from
    every start token separately.

    :param d: digraph.
    :param limit: largest n tried.
    :return: True when such a sequence exists.
    """
    successors: dict[int, set[int]] = {position: set() for position in range(len(d.nodes))}
    for source, target, _ in d.arcs:
        successors[source].add(target)
    for start in range(len(d.nodes)):
        goal = {start, d.involution[start]}
        frontier = {start}
        for _ in range(limit):
            frontier = {target for node in frontier for target in successors[node]}
            if frontier & goal:
                return True
            if not frontier:
                break
    return False


def check_recurrence(c: ComplexSpec, simply_connected: bool = False) -> RecurrenceReport:  # noqa: C901
    """
    Evaluate the recurrence conditions on a shaped complex.

    Condition (v) gets a verdict only when the complex is asserted to be
    simply connected; the digraph facts are reported in any case.

    :param c: complex.
    :param simply_connected: caller's assertion.
    :return: report.
    """
    tokens = instantiate_directions(c)
    token_set = set(tokens)
    face_counts = {face.id: 0 for face in c.faces}
    for token in tokens:
        face_counts[token.face] += 1
    conditions = [
        ConditionVerdict(name="i", passed=True, detail=f"{len(tokens)} tokens on {len(c.faces)} faces"),
    ]

    closure_offenders = sorted(
        {
            token.label()
            for token in tokens
            if any(image not in token_set for image in continuations_of(c, token))
        },
    )
    conditions.append(
        ConditionVerdict(name="ii", passed=not closure_offenders, offenders=tuple(closure_offenders)),
    )

    chord_offenders = []
    for token in tokens:
        try:
            image = involution_of(c, token)
        except VertexHitError:
            chord_offenders.append(f"{token.label()} (vertex hit)")
            continue
        if image not in token_set:
            chord_offenders.append(token.label())
    conditions.append(
        ConditionVerdict(name="iii", passed=not chord_offenders, offenders=tuple(chord_offenders)),
    )

    perpendicular_edges = {token.edge for token in tokens if token.is_perpendicular}
    thick_offenders = tuple(
        edge.id
        for edge in c.edges
        if edge_degree(c, edge.id) >= 3 and edge.id not in perpendicular_edges
    )
    detail = "" if not closure_offenders else "checked over all adjacent faces, relies on (ii)"
    conditions.append(
        ConditionVerdict(name="iv", passed=not thick_offenders, detail=detail, offenders=thick_offenders),
    )

    acyclic: Optional[bool] = None
    returns: Optional[bool] = None
    if closure_offenders or chord_offenders:
        conditions.append(ConditionVerdict(name="v", passed=None, detail="needs (ii) and (iii)"))
    else:
        digraph = build_markov(c)
        acyclic = nx.is_directed_acyclic_graph(digraph.graph)
        returns = any(
            digraph.involution[position] in nx.descendants(digraph.graph, position)
            for position in range(len(digraph.nodes))
        )
        if simply_connected:
            conditions.append(ConditionVerdict(name="v", passed=acyclic and not returns))
        else:
            conditions.append(ConditionVerdict(name="v", passed=None, detail="simple connectivity not asserted"))

    b0, b1 = homology_ranks(c)
    warnings = []
    if simply_connected and b1 > 0:
        message = f"b1 = {b1} contradicts the simple connectivity assertion"
        logger.warning(message)
        warnings.append(message)
    return RecurrenceReport(
        token_count=len(tokens),
        face_counts=face_counts,
        conditions=tuple(conditions),
        acyclic=acyclic,
        returns_to_involution=returns,
        b0=b0,
        b1=b1,
        simply_connected_asserted=simply_connected,
        warnings=tuple(warnings),
    )
