"""
Artin and Coxeter groups of labeled graphs.

Generators are single lower-case letters, their inverses the upper-case
letters. Coxeter words ignore the case.
"""
import itertools
import logging
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import networkx as nx

from recurrent_workbench.exceptions import (
    BlockError,
    ElementCapExceeded,
    PresentationError,
    ProbeError,
    UnknownElementError,
)
from recurrent_workbench.models.artin import (
    BlockRun,
    CayleyBall,
    DihedralElement,
    DihedralVerdict,
    GraphFlags,
    Hypergraph,
    HypergraphProjection,
    LabeledGraph,
    Target,
    WallProbeResult,
)
from recurrent_workbench.models.complex import ComplexSpec, Edge, EdgeRef, Face
from recurrent_workbench.models.diagram import DiagramEdge, PlanarDiagram, Presentation, Region
from recurrent_workbench.services.diagrams import square_grid_diagram
from recurrent_workbench.services.hypergraphs import trace_all_hypergraphs, walls_cross
from recurrent_workbench.services.quadratic import ONE
from recurrent_workbench.services.shapes import SUPPORTED_HALF_SIDES
from recurrent_workbench.services.words import (
    Word,
    alternating,
    build_presentation,
    format_word,
    free_reduce,
    generator_of,
    invert_word,
    is_positive,
)
from recurrent_workbench.settings import settings

logger = logging.getLogger(__name__)

BALL_CAVEAT = "checked inside a finite ball; a wall may still meet the other one outside it"
DIHEDRAL = ("a", "b")


def labeled_graph(vertices: Sequence[str], edges: Iterable[Sequence[object]]) -> LabeledGraph:
    """
    Checked labeled graph.

    :param vertices: generator names, single lower-case letters.
    :param edges: triples (first, second, label).
    :raises PresentationError: for bad names, loops, repeated edges or labels below 2.
    :return: labeled graph.
    """
    names = tuple(vertices)
    for index, name in enumerate(names):
        if len(name) != 1 or not name.islower():
            raise PresentationError(f"vertices.{index}: generator {name!r} is not a lower-case letter")
    if len(set(names)) != len(names):
        raise PresentationError("vertices: repeated generator")
    triples = []
    seen: set[frozenset[str]] = set()
    for index, edge in enumerate(edges):
        first, second, label = str(edge[0]), str(edge[1]), int(edge[2])  # type: ignore[call-overload]
        if first not in names or second not in names:
            raise PresentationError(f"edges.{index}: unknown generator")
        if first == second:
            raise PresentationError(f"edges.{index}: loop at {first}")
        if frozenset((first, second)) in seen:
            raise PresentationError(f"edges.{index}: repeated edge {first}{second}")
        if label < 2:
            raise PresentationError(f"edges.{index}: label {label} is below 2")
        seen.add(frozenset((first, second)))
        triples.append((first, second, label))
    return LabeledGraph(vertices=names, edges=tuple(triples))


def _simple_graph(g: LabeledGraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices)
    for first, second, label in g.edges:
        graph.add_edge(first, second, label=label)
    return graph


def standard_presentation(g: LabeledGraph, target: Target) -> Presentation:
    """
    Standard presentation of the Artin or Coxeter group.

    Artin: p_m(a, b) p_m(b, a)^-1 for every edge. Coxeter: (ab)^m for
    every edge and aa for every generator.
    """
    relators: list[Word] = []
    for first, second, label in g.edges:
        if target == Target.ARTIN:
            relators.append(alternating(first, second, label) + invert_word(alternating(second, first, label)))
        else:
            relators.append(alternating(first, second, 2 * label))
    if target == Target.COXETER:
        relators.extend((generator, generator) for generator in g.vertices)
    return build_presentation(g.vertices, relators)


def classify_graph(g: LabeledGraph) -> GraphFlags:
    """
    Extra-large, two-dimensional and the forbidden-configuration flags.

    Two-dimensional means every triangle of labels has reciprocal sum at most 1.
    """
    graph = _simple_graph(g)
    triangles = []
    squares = []
    for cycle in nx.simple_cycles(graph, length_bound=4):
        if len(cycle) == 3:
            triangles.append(tuple(sorted(cycle)))
        elif len(cycle) == 4:
            squares.append(cycle)

    def labels_of(cycle: Sequence[str]) -> list[int]:
        return [graph.edges[cycle[k], cycle[(k + 1) % len(cycle)]]["label"] for k in range(len(cycle))]

    return GraphFlags(
        extra_large=all(label >= 4 for _, _, label in g.edges),
        triangle_with_two=any(2 in labels_of(cycle) for cycle in triangles),
        two_dimensional=all(sum(Fraction(1, label) for label in labels_of(cycle)) <= 1 for cycle in triangles),
        square_with_three_twos=any(labels_of(cycle).count(2) >= 3 for cycle in squares),
        triangles=tuple(sorted(triangles)),
    )


def _dihedral_letters(w: Sequence[str], pair: tuple[str, str]) -> Word:
    allowed = {pair[0], pair[1], pair[0].upper(), pair[1].upper()}
    word = tuple(w)
    unknown = sorted(set(word) - allowed)
    if unknown:
        raise PresentationError(f"letters {unknown} outside {{{', '.join(sorted(allowed))}}}")
    return word


def _twist(word: Sequence[str], m: int, pair: tuple[str, str]) -> list[str]:
    """Conjugation by the Garside element: the identity for even m, swaps the generators for odd m."""
    if m % 2 == 0:
        return list(word)
    swap = {pair[0]: pair[1], pair[1]: pair[0]}
    return [swap[letter] for letter in word]


def _first_delta(word: Sequence[str], m: int) -> Optional[int]:
    """Start of the first alternating factor of length m."""
    run = 0
    for position, letter in enumerate(word):
        run = run + 1 if position and letter != word[position - 1] else 1
        if run >= m:
            return position - m + 1
    return None


def artin_normal_form(w: Sequence[str], m: int, pair: tuple[str, str] = DIHEDRAL) -> tuple[int, Word]:
    """
    Garside normal form in the dihedral Artin group with label m.

    Every element is Delta^e Q with Delta = p_m(a, b) and Q a positive
    word without an alternating factor of length m; both are unique.

    :param w: word over the pair and its inverses.
    :param m: label.
    :param pair: generator names.
    :return: (e, Q).
    """
    word = _dihedral_letters(w, pair)
    negatives = 0
    positive: list[str] = []
    for letter in word:
        if is_positive(letter):
            positive.append(letter)
            continue
        generator = letter.lower()
        ending = alternating(pair[0], pair[1], m)
        if ending[-1] != generator:
            ending = alternating(pair[1], pair[0], m)
        positive = _twist(positive, m, pair) + list(ending[:-1])
        negatives += 1
    extracted = 0
    start = _first_delta(positive, m)
    while start is not None:
        positive = _twist(positive[:start], m, pair) + positive[start + m:]
        extracted += 1
        start = _first_delta(positive, m)
    return extracted - negatives, tuple(positive)


def artin_word(power: int, tail: Sequence[str], m: int, pair: tuple[str, str] = DIHEDRAL) -> Word:
    delta = alternating(pair[0], pair[1], m)
    if power < 0:
        delta = invert_word(delta)
    return delta * abs(power) + tuple(tail)


def _multiply(first: DihedralElement, second: DihedralElement) -> DihedralElement:
    m = first.m
    if first.kind == "rotation":
        return DihedralElement(kind=second.kind, k=(first.k + second.k) % m, m=m)
    if second.kind == "rotation":
        return DihedralElement(kind="reflection", k=(first.k - second.k) % m, m=m)
    return DihedralElement(kind="rotation", k=(first.k - second.k) % m, m=m)


def coxeter_dihedral_element(w: Sequence[str], m: int) -> DihedralElement:
    """Image of a word in the dihedral group of order 2m; a is reflection 0, b reflection m - 1."""
    element = DihedralElement(kind="rotation", k=0, m=m)
    generators = {"a": DihedralElement("reflection", 0, m), "b": DihedralElement("reflection", (m - 1) % m, m)}
    for letter in _dihedral_letters(w, DIHEDRAL):
        element = _multiply(element, generators[generator_of(letter)])
    return element


def coxeter_dihedral_word(element: DihedralElement) -> Word:
    """Shortest alternating word for a dihedral element, the one starting with a on ties."""
    k, m = element.k, element.m
    if element.kind == "rotation":
        if k == 0:
            return ()
        if k <= m - k:
            return alternating("a", "b", 2 * k)
        return alternating("b", "a", 2 * (m - k))
    if k <= m - 1 - k:
        return alternating("a", "b", 2 * k + 1)
    return alternating("b", "a", 2 * (m - 1 - k) + 1)


def dihedral_word_problem(w: Sequence[str], m: int, target: Target) -> DihedralVerdict:
    """
    Decide whether a word over a, b is trivial in the dihedral Artin or Coxeter group.

    :param w: word over a, b, A, B.
    :param m: label.
    :param target: artin or coxeter.
    :raises PresentationError: for m below 2 or foreign letters.
    :return: verdict with the normal form.
    """
    if m < 2:
        raise PresentationError(f"label {m} is below 2")
    if target == Target.COXETER:
        element = coxeter_dihedral_element(w, m)
        return DihedralVerdict(
            trivial=element.kind == "rotation" and element.k == 0,
            normal_form=coxeter_dihedral_word(element),
            element=element,
        )
    power, tail = artin_normal_form(w, m)
    return DihedralVerdict(
        trivial=power == 0 and not tail,
        normal_form=artin_word(power, tail, m),
        delta_power=power,
    )


def _braid_neighbours(word: Word, g: LabeledGraph) -> Iterable[Word]:
    for position in range(len(word) - 1):
        first, second = word[position], word[position + 1]
        if first == second:
            continue
        label = g.label(first, second)
        if label is None or position + label > len(word):
            continue
        if word[position:position + label] == alternating(first, second, label):
            yield word[:position] + alternating(second, first, label) + word[position + label:]


def _braid_class(word: Word, g: LabeledGraph) -> set[Word]:
    found = {word}
    stack = [word]
    while stack:
        for neighbour in _braid_neighbours(stack.pop(), g):
            if neighbour not in found:
                found.add(neighbour)
                stack.append(neighbour)
    return found


def _shortened(words: Iterable[Word]) -> Optional[Word]:
    for word in sorted(words):
        for position in range(len(word) - 1):
            if word[position] == word[position + 1]:
                return word[:position] + word[position + 2:]
    return None


def coxeter_normal_form(w: Sequence[str], g: LabeledGraph) -> Word:
    """
    Least reduced word of an element of the Coxeter group.

    Braid moves and deletion of repeated letters reach a reduced word;
    the reduced words of an element form one braid class.

    :param w: word, case ignored.
    :param g: labeled graph.
    :raises PresentationError: for letters outside the graph.
    :return: lexicographically least reduced word.
    """
    current = tuple(generator_of(letter) for letter in w)
    unknown = sorted(set(current) - set(g.vertices))
    if unknown:
        raise PresentationError(f"letters {unknown} are not generators of the graph")
    while True:
        klass = _braid_class(current, g)
        shorter = _shortened(klass)
        if shorter is None:
            return min(klass)
        current = shorter


def tits_coxeter_word_problem(w: Sequence[str], g: LabeledGraph) -> bool:
    """True when the word is trivial in the Coxeter group."""
    return not coxeter_normal_form(w, g)


def _gon_face(face_id: str, boundary: Sequence[EdgeRef]) -> Face:
    size = len(boundary)
    tagged = size % 2 == 0 and size // 2 in SUPPORTED_HALF_SIDES
    return Face(
        id=face_id,
        boundary=tuple(boundary),
        shape=f"Gon({size})" if tagged else None,
        sides=tuple(range(size)) if tagged else None,
    )


class _KeyFunction:
    """Normal form used as the vertex key of a ball."""

    def __init__(self, g: LabeledGraph, target: Target) -> None:
        self.g = g
        self.target = target
        self.cache: dict[Word, Word] = {}

    def __call__(self, word: Word) -> Word:
        found = self.cache.get(word)
        if found is None:
            if self.target == Target.COXETER:
                found = coxeter_normal_form(word, self.g)
            else:
                first, second, label = self.g.edges[0]
                power, tail = artin_normal_form(word, label, (first, second))
                found = artin_word(power, tail, label, (first, second))
            self.cache[word] = found
        return found


def _grow(letters: Sequence[str], key: _KeyFunction, radius: int, cap: int) -> dict[Word, int]:
    elements: dict[Word, int] = {(): 0}
    frontier: list[Word] = [()]
    for distance in range(1, radius + 1):
        following = []
        for element in frontier:
            for letter in letters:
                image = key(element + (letter,))
                if image in elements:
                    continue
                elements[image] = distance
                following.append(image)
                if len(elements) > cap:
                    raise ElementCapExceeded(f"Cayley ball exceeds the cap of {cap} elements")
        logger.debug("ball radius %d: %d elements", distance, len(elements))
        frontier = following
    return elements


def _artin_ball(g: LabeledGraph, radius: int, cap: int) -> CayleyBall:
    first, second, label = g.edges[0]
    key = _KeyFunction(g, Target.ARTIN)
    elements = _grow((first, first.upper(), second, second.upper()), key, radius, cap)
    edges = []
    generators = {}
    for element in elements:
        for generator in (first, second):
            image = key(element + (generator,))
            if image in elements:
                edge_id = f"{format_word(element)}.{generator}"
                edges.append(Edge(id=edge_id, tail=format_word(element), head=format_word(image), length=ONE))
                generators[edge_id] = generator
    relator = alternating(first, second, label) + invert_word(alternating(second, first, label))
    faces = []
    for element in elements:
        corners = [element]
        for letter in relator:
            corners.append(key(corners[-1] + (letter,)))
        if not all(corner in elements for corner in corners):
            continue
        darts = []
        for step, letter in enumerate(relator):
            if is_positive(letter):
                darts.append(EdgeRef(f"{format_word(corners[step])}.{letter}", True))
            else:
                darts.append(EdgeRef(f"{format_word(corners[step + 1])}.{letter.lower()}", False))
        faces.append(_gon_face(f"{format_word(element)}:r", darts))
    return CayleyBall(
        complex_spec=ComplexSpec(
            vertices=tuple(format_word(element) for element in elements),
            edges=tuple(edges),
            faces=tuple(faces),
        ),
        root=format_word(()),
        radius=radius,
        target=Target.ARTIN,
        graph=g,
        elements={format_word(element): element for element in elements},
        edge_generators=generators,
    )


def _coxeter_ball(g: LabeledGraph, radius: int, cap: int) -> CayleyBall:
    key = _KeyFunction(g, Target.COXETER)
    elements = _grow(g.vertices, key, radius, cap)
    edges = []
    generators = {}
    for element in elements:
        for generator in g.vertices:
            image = key(element + (generator,))
            if image in elements and len(image) > len(element):
                edge_id = f"{format_word(element)}.{generator}"
                edges.append(Edge(id=edge_id, tail=format_word(element), head=format_word(image), length=ONE))
                generators[edge_id] = generator
    faces = []
    for element in elements:
        for first, second, label in g.edges:
            if len(key(element + (first,))) < len(element) or len(key(element + (second,))) < len(element):
                continue
            corners = [element]
            letters = alternating(first, second, 2 * label)
            for letter in letters:
                corners.append(key(corners[-1] + (letter,)))
            if not all(corner in elements for corner in corners):
                continue
            darts = []
            for step, letter in enumerate(letters):
                here, there = corners[step], corners[step + 1]
                if len(there) > len(here):
                    darts.append(EdgeRef(f"{format_word(here)}.{letter}", True))
                else:
                    darts.append(EdgeRef(f"{format_word(there)}.{letter}", False))
            faces.append(_gon_face(f"{format_word(element)}:{first}{second}", darts))
    return CayleyBall(
        complex_spec=ComplexSpec(
            vertices=tuple(format_word(element) for element in elements),
            edges=tuple(edges),
            faces=tuple(faces),
        ),
        root=format_word(()),
        radius=radius,
        target=Target.COXETER,
        graph=g,
        elements={format_word(element): element for element in elements},
        edge_generators=generators,
    )


def build_cayley_ball(g: LabeledGraph, target: Target, radius: int, cap: Optional[int] = None) -> CayleyBall:
    """
    Ball of the Cayley complex around the identity.

    Vertices are elements within ``radius`` of the identity, named by
    their normal form (``1`` for the identity). A relator cell is added
    when all its corners lie in the ball; 2m-gons get a Gon tag when the
    regular polygon is supported.

    :param g: labeled graph; Artin balls need a single edge.
    :param target: artin or coxeter.
    :param radius: word-metric radius.
    :param cap: element cap, the configured one by default.
    :raises PresentationError: for an Artin ball over another graph or a negative radius.
    :raises ElementCapExceeded: when the ball grows beyond the cap.
    :return: the ball.
    """
    if radius < 0:
        raise PresentationError(f"radius {radius} is negative")
    limit = settings.element_cap if cap is None else cap
    if target == Target.ARTIN:
        if len(g.edges) != 1 or len(g.vertices) != 2:
            raise PresentationError("Artin balls are built for a single-edge graph only")
        ball = _artin_ball(g, radius, limit)
    else:
        ball = _coxeter_ball(g, radius, limit)
    logger.info(
        "%s ball of radius %d: %d vertices, %d edges, %d faces",
        target.value,
        radius,
        len(ball.complex_spec.vertices),
        len(ball.complex_spec.edges),
        len(ball.complex_spec.faces),
    )
    return ball


def _syllables(word: Word) -> tuple[tuple[str, int], ...]:
    found: list[tuple[str, int]] = []
    for letter in word:
        step = 1 if is_positive(letter) else -1
        generator = generator_of(letter)
        if found and found[-1][0] == generator:
            found[-1] = (generator, found[-1][1] + step)
        else:
            found.append((generator, step))
    return tuple(found)


def _form(syllables: tuple[tuple[str, int], ...]) -> Optional[str]:
    if len(syllables) == 2:
        return "a^k b^l"
    if len(syllables) == 3 and syllables[0][0] == syllables[2][0] and abs(syllables[1][1]) == 1:
        return "a^k b a^l"
    return None


def _projection(run: Word, generators: tuple[str, ...], label: Optional[int]) -> str:
    if label is None:
        parity = len(run) % 2
        return generators[0] if parity else "1"
    to_dihedral = {generators[0]: "a", generators[1]: "b"}
    back = {"a": generators[0], "b": generators[1]}
    element = coxeter_dihedral_element([to_dihedral[generator_of(letter)] for letter in run], label)
    return format_word([back[letter] for letter in coxeter_dihedral_word(element)])


def block_factorization(w: Sequence[str], g: LabeledGraph) -> list[BlockRun]:
    """
    Factor a word into maximal two-generator runs.

    A run is extended while its letters stay within two generators;
    the first letter outside starts the next run.

    :param w: word over the graph's generators and inverses.
    :param g: labeled graph.
    :raises BlockError: for unknown generators and runs over non-adjacent generators.
    :return: runs with their dihedral block, syllables, form flag and Coxeter projection.
    """
    word = free_reduce(w)
    runs: list[list[str]] = []
    alphabets: list[list[str]] = []
    for letter in word:
        generator = generator_of(letter)
        if generator not in g.vertices:
            raise BlockError(f"generator {generator!r} is not a vertex of the graph")
        if runs and (generator in alphabets[-1] or len(alphabets[-1]) < 2):
            runs[-1].append(letter)
            if generator not in alphabets[-1]:
                alphabets[-1].append(generator)
        else:
            runs.append([letter])
            alphabets.append([generator])
    found = []
    for run, alphabet in zip(runs, alphabets):
        label = None
        if len(alphabet) == 2:
            label = g.label(alphabet[0], alphabet[1])
            if label is None:
                raise BlockError(f"no block exists for {alphabet[0]} and {alphabet[1]}: they are not adjacent")
        syllables = _syllables(tuple(run))
        found.append(
            BlockRun(
                word=tuple(run),
                generators=tuple(alphabet),
                label=label,
                syllables=syllables,
                form=_form(syllables),
                projection=_projection(tuple(run), tuple(alphabet), label),
            ),
        )
    return found


def example_a2_graph() -> LabeledGraph:
    """Triangle on a, b, c with every label 2."""
    return labeled_graph(("a", "b", "c"), (("a", "b", 2), ("a", "c", 2), ("b", "c", 2)))


def example_a2_presentation() -> Presentation:
    return standard_presentation(example_a2_graph(), Target.ARTIN)


def _refs(text: str) -> tuple[EdgeRef, ...]:
    return tuple(EdgeRef(token[:-1], token.endswith("+")) for token in text.split())


_BOX_EDGES = (
    ("k00", "g00", "q00", "c"),
    ("k20", "g20", "q20", "c"),
    ("k22", "g22", "q22", "c"),
    ("k02", "g02", "q02", "c"),
    ("ct1", "g12", "t1", "c"),
    ("cu1", "g10", "u1", "c"),
    ("cl1", "g01", "l1", "c"),
    ("cr1", "g21", "r1", "c"),
    ("at0", "q02", "t1", "a"),
    ("at1", "t1", "q22", "a"),
    ("ab0", "q00", "u1", "a"),
    ("ab1", "u1", "q20", "a"),
    ("bl0", "q00", "l1", "b"),
    ("bl1", "l1", "q02", "b"),
    ("br0", "q20", "r1", "b"),
    ("br1", "r1", "q22", "b"),
)
_BOX_SIDES = (
    ("top0", "h02+ ct1+ at0- k02-", "r1"),
    ("top1", "h12+ k22+ at1- ct1-", "r1"),
    ("bottom0", "ab0+ cu1- h00- k00+", "r1"),
    ("bottom1", "ab1+ k20- h10- cu1+", "r1"),
    ("left0", "k00- v00+ cl1+ bl0-", "r2"),
    ("left1", "cl1- v01+ k02+ bl1-", "r2"),
    ("right0", "k20+ br0+ cr1- v20-", "r2"),
    ("right1", "cr1+ br1+ k22- v21-", "r2"),
)


def example_a2_diagram() -> PlanarDiagram:
    """
    Reduced 12-region diagram over the a, b, c triangle with labels 2.

    Four commutator squares abAB form a 2x2 grid; each side of the grid
    carries two squares in a and c (top, bottom) or b and c (left, right),
    and neighbouring sides share their corner c-edge. The c-edges then
    carry a closed hypergraph through the eight side squares.
    """
    grid = square_grid_diagram(2, 2)
    extra_vertices = ("q00", "q20", "q22", "q02", "t1", "u1", "l1", "r1")
    edges = grid.edges + tuple(
        DiagramEdge(id=edge_id, tail=tail, head=head, letter=letter) for edge_id, tail, head, letter in _BOX_EDGES
    )
    central = tuple(Region(id=region.id, boundary=region.boundary, marker="r0") for region in grid.regions)
    sides = tuple(Region(id=region_id, boundary=_refs(text), marker=marker) for region_id, text, marker in _BOX_SIDES)
    return PlanarDiagram(
        vertices=grid.vertices + extra_vertices,
        edges=edges,
        regions=central + sides,
        boundary=_refs("ab0+ ab1+ br0+ br1+ at1- at0- bl1- bl0-"),
    )


def _wall_index(c: ComplexSpec) -> dict[str, Hypergraph]:
    return {edge: wall for wall in trace_all_hypergraphs(c) for edge in wall.edges}


def _adjacent_edges(c: ComplexSpec, face: Face, shared: str) -> list[str]:
    ends = {c.edge_map[shared].tail, c.edge_map[shared].head}
    return [
        ref.edge
        for ref in face.boundary
        if ref.edge != shared and {c.start(ref), c.end(ref)} & ends
    ]


def _probe(
    c: ComplexSpec,
    walls: dict[str, Hypergraph],
    sigma: Face,
    tau: Face,
    wall_sigma: Hypergraph,
) -> WallProbeResult:
    shared = sorted({ref.edge for ref in sigma.boundary} & {ref.edge for ref in tau.boundary})
    if sigma.id == tau.id or not shared:
        raise ProbeError(f"faces {sigma.id} and {tau.id} are not adjacent")
    if sigma.id not in wall_sigma.faces:
        raise ProbeError(f"wall {wall_sigma.component} does not meet {sigma.id}")
    edge = shared[0]
    through_tau = [walls[ref.edge] for ref in tau.boundary[: tau.size // 2]]
    if tau.size == 4:
        rule = "square rule"
        preferred = [wall for wall in through_tau if edge not in wall.edges]
    else:
        rule = "adjacent edge rule"
        adjacent = set(_adjacent_edges(c, tau, edge))
        preferred = [wall for wall in through_tau if wall.edges & adjacent]
    rest = [wall for wall in through_tau if wall not in preferred]
    witnesses = []
    for name, candidates in ((rule, preferred), ("fallback", rest)):
        for wall in candidates:
            crossing = walls_cross(wall, wall_sigma)
            if not crossing:
                return WallProbeResult(
                    sigma=sigma.id,
                    tau=tau.id,
                    shared_edge=edge,
                    wall_sigma=wall_sigma.component,
                    found=wall,
                    rule=name,
                )
            witnesses.append((min(wall.edges), f"crosses wall {wall_sigma.component} in {crossing[0]}"))
    logger.warning("no wall through %s avoids wall %d: %s", tau.id, wall_sigma.component, BALL_CAVEAT)
    return WallProbeResult(
        sigma=sigma.id,
        tau=tau.id,
        shared_edge=edge,
        wall_sigma=wall_sigma.component,
        found=None,
        candidates=tuple(witnesses),
        caveat=BALL_CAVEAT,
    )


def coxeter_wall_probe(ball: CayleyBall, sigma: str, tau: str, wall_sigma: Hypergraph) -> WallProbeResult:
    """
    Look for a wall through tau that is disjoint from or equal to a wall through sigma.

    Two walls meet when some face carries an antipodal pair of each.
    Squares try the wall of tau missing the shared edge first, other
    polygons the walls through edges next to the shared edge; then every
    wall of tau is tried.

    :param ball: Coxeter ball.
    :param sigma: face id.
    :param tau: face id sharing an edge with sigma.
    :param wall_sigma: wall through sigma.
    :raises UnknownElementError: for unknown faces.
    :raises ProbeError: for faces that are not adjacent or a wall missing sigma.
    :return: the wall found, or every candidate with the face where it crosses.
    """
    c = ball.complex_spec
    for face_id in (sigma, tau):
        if face_id not in c.face_map:
            raise UnknownElementError(f"unknown face {face_id!r}")
    return _probe(c, _wall_index(c), c.face_map[sigma], c.face_map[tau], wall_sigma)


def probe_ball(ball: CayleyBall) -> list[WallProbeResult]:
    """Probe every adjacent face pair of a ball with every wall through the first face."""
    c = ball.complex_spec
    walls = _wall_index(c)
    results = []
    for sigma in c.faces:
        neighbours = sorted(
            {face_id for ref in sigma.boundary for face_id, _ in c.traversals[ref.edge]} - {sigma.id},
        )
        sigma_walls = {walls[ref.edge].component: walls[ref.edge] for ref in sigma.boundary}
        for tau_id, component in itertools.product(neighbours, sorted(sigma_walls)):
            results.append(_probe(c, walls, sigma, c.face_map[tau_id], sigma_walls[component]))
    failures = sum(result.found is None for result in results)
    logger.info("%d probes, %d without a wall", len(results), failures)
    return results


def project_hypergraph(artin: CayleyBall, coxeter: CayleyBall, h: Hypergraph) -> HypergraphProjection:
    """
    Map an Artin wall edge by edge into a Coxeter ball.

    :param artin: Artin ball.
    :param coxeter: Coxeter ball of the same graph.
    :param h: wall of the Artin ball.
    :return: consistent when every image edge lies in one embedded Coxeter wall.
    """
    walls = _wall_index(coxeter.complex_spec)
    images = set()
    missing = []
    for edge_id in sorted(h.edges):
        edge = artin.complex_spec.edge_map[edge_id]
        generator = artin.edge_generators[edge_id]
        here = coxeter_normal_form(artin.elements[edge.tail], coxeter.graph)
        there = coxeter_normal_form(here + (generator,), coxeter.graph)
        tail = here if len(here) < len(there) else there
        image = f"{format_word(tail)}.{generator}"
        if image in coxeter.complex_spec.edge_map:
            images.add(image)
        else:
            missing.append(edge_id)
    components = {walls[image].component for image in images}
    wall = walls[min(images)] if len(components) == 1 else None
    return HypergraphProjection(
        consistent=wall is not None and wall.embedded and not missing,
        coxeter_wall=wall,
        missing_edges=tuple(missing),
    )
