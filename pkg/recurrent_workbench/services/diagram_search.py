"""
Bounded least-area search for disc diagrams.

A state is the multiset of holes still to be filled, each a cyclically
reduced boundary word. Every state branches at a single hole letter, the
one with the fewest ways to be covered: either a relator region contains
its edge, glued along one or more arcs of the hole (the hole then splits
into one sub-hole between each pair of consecutive arcs), or the letter
is a bridge whose edge is read a second time backwards further along the
hole (the hole splits in two at no cost). Sub-holes whose exponent sums
cannot vanish in the group are never opened, and a state is dropped
once the regions its holes still need would pass the bound. Since every
diagram covers the chosen letter one of these ways, the first empty
state is reached with least area.
"""
import itertools
import logging
import math
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence, TypeVar, Union

from recurrent_workbench.exceptions import UnknownElementError
from recurrent_workbench.models.complex import ComplexSpec, EdgeRef
from recurrent_workbench.models.diagram import (
    CornerSubwords,
    DiagramEdge,
    DiagramSearchResult,
    PlanarDiagram,
    Presentation,
    Region,
)
from recurrent_workbench.services.complexes import attach_annulus, check_closed_path
from recurrent_workbench.services.diagrams import region_label
from recurrent_workbench.services.words import (
    Word,
    alternating,
    build_presentation,
    format_word,
    generator_of,
    invert_letter,
    invert_word,
    is_positive,
    minimal_rotation,
    rotate,
    syllable_ids,
)

logger = logging.getLogger(__name__)

Item = TypeVar("Item")
Holes = tuple[Word, ...]
# hole position of the first letter, length, relator offset
Arc = tuple[int, int, int]
COLLAR_PREFIX = "ann:"


@dataclass(frozen=True)
class Gluing:
    """A region glued along arcs of one hole, listed in hole order; the relator is read from the first arc."""

    hole: int
    relator: Word
    name: str
    arcs: tuple[Arc, ...]


@dataclass(frozen=True)
class Bridge:
    """Letters ``first`` < ``second`` of one hole read along the same edge in opposite directions."""

    hole: int
    first: int
    second: int


Move = Union[Gluing, Bridge]


def _fold(items: Sequence[Item], label: Callable[[Item], str], on_fold: Callable[[Item, Item], None]) -> list[Item]:
    """Cancel adjacent inverse letters, cyclically."""
    stack: list[Item] = []
    for item in items:
        if stack and label(stack[-1]) == invert_letter(label(item)):
            on_fold(stack.pop(), item)
        else:
            stack.append(item)
    while len(stack) >= 2 and label(stack[-1]) == invert_letter(label(stack[0])):
        last = stack.pop()
        first = stack.pop(0)
        on_fold(last, first)
    return stack


def _letter(item: str) -> str:
    return item


def _ignore(first: str, second: str) -> None:
    return None


def fold_word(word: Sequence[str]) -> Word:
    return tuple(_fold(word, _letter, _ignore))


def relator_rotations(relators: Sequence[tuple[Word, str]]) -> list[tuple[Word, str]]:
    """Cyclic shifts of relators and their inverses, each tagged with its relator's name."""
    found: dict[Word, str] = {}
    for word, name in relators:
        for candidate in (word, invert_word(word)):
            for offset in range(len(candidate)):
                found.setdefault(rotate(candidate, offset), name)
    return list(found.items())


def _layout(size: int, gluing: Gluing) -> list[tuple[list[int], list[int], Word]]:
    """Per arc: hole positions glued, hole positions up to the next arc, relator letters leading there."""
    found = []
    arcs = gluing.arcs
    for index, (start, length, offset) in enumerate(arcs):
        if index + 1 < len(arcs):
            following, _, resume = arcs[index + 1]
        else:
            following, resume = arcs[0][0], len(gluing.relator)
        gap = (following - start - length) % size
        found.append(
            (
                [(start + step) % size for step in range(length)],
                [(start + length + step) % size for step in range(gap)],
                gluing.relator[offset + length:resume],
            ),
        )
    return found


def _pieces(hole: Sequence[Item], move: Move, interior: Callable[[Word], list[Item]]) -> list[list[Item]]:
    if isinstance(move, Bridge):
        return [list(hole[move.first + 1:move.second]), list(hole[move.second + 1:]) + list(hole[:move.first])]
    return [[hole[position] for position in between] + interior(free) for _, between, free in _layout(len(hole), move)]


def _reopened_letters(free: Word) -> list[str]:
    return list(invert_word(free))


def _no_darts(free: Word) -> list[EdgeRef]:
    return []


def _successor(holes: Holes, move: Move) -> Holes:
    pieces = [fold_word(piece) for piece in _pieces(holes[move.hole], move, _reopened_letters)]
    return holes[:move.hole] + tuple(piece for piece in pieces if piece) + holes[move.hole + 1:]


def _key(holes: Holes) -> Holes:
    return tuple(sorted(minimal_rotation(hole) for hole in holes))


def _exponents(word: Sequence[str]) -> Counter[str]:
    sums: Counter[str] = Counter()
    for letter in word:
        sums[generator_of(letter)] += 1 if is_positive(letter) else -1
    return sums


class _Search:
    """Least-area filling of a multiset of holes by relator regions."""

    def __init__(self, relators: list[tuple[Word, str]]) -> None:
        self.by_letter: dict[str, list[tuple[Word, str]]] = defaultdict(list)
        for word, name in relators:
            self.by_letter[word[0]].append((word, name))
        self.longest = max((len(word) for word, _ in relators), default=1)
        # generators with nonzero exponent sum in some relator; all others sum to zero in a trivial word
        self.unbalanced = frozenset(
            generator for word, _ in relators for generator, total in _exponents(word).items() if total
        )

    def admissible(self, word: Sequence[str]) -> bool:
        return all(not total for generator, total in _exponents(word).items() if generator not in self.unbalanced)

    def lower_bound(self, holes: Holes) -> int:
        needed = 0
        for hole in holes:
            mass = sum(abs(total) for generator, total in _exponents(hole).items() if generator in self.unbalanced)
            needed += max(1, math.ceil(mass / self.longest))
        return needed

    def first_arcs(self, hole: Word, position: int) -> list[tuple[Word, str, int, int]]:
        """Arcs covering ``position`` that read a relator prefix: relator, name, start, length."""
        size = len(hole)
        found = []
        for back in range(min(size, self.longest)):
            start = (position - back) % size
            for relator, name in self.by_letter.get(hole[start], ()):
                for length in range(1, min(len(relator), size) + 1):
                    if hole[(start + length - 1) % size] != relator[length - 1]:
                        break
                    if length > back:
                        found.append((relator, name, start, length))
        return found

    def gluings(self, index: int, hole: Word, relator: Word, name: str, arcs: list[Arc]) -> Iterator[Gluing]:
        yield Gluing(index, relator, name, tuple(arcs))
        size = len(hole)
        start = arcs[0][0]
        last_start, last_length, last_offset = arcs[-1]
        reach = (last_start - start) % size + last_length
        resume = last_offset + last_length
        for offset in range(resume, len(relator)):
            interior = invert_word(relator[resume:offset])
            for gap in range(1, size - reach - 1):
                between = [hole[(start + reach + step) % size] for step in range(gap)]
                if not self.admissible(between + list(interior)):
                    continue
                position = (start + reach + gap) % size
                room = min(len(relator) - offset, size - reach - gap - 1)
                for length in range(1, room + 1):
                    if hole[(position + length - 1) % size] != relator[offset + length - 1]:
                        break
                    yield from self.gluings(index, hole, relator, name, arcs + [(position, length, offset)])

    def expand(self, holes: Holes) -> Iterator[tuple[Move, int]]:
        """Moves covering the hole letter with the fewest options, with their cost in regions."""
        best: Optional[tuple[int, int, int, list[tuple[Word, str, int, int]], list[int]]] = None
        for index, hole in enumerate(holes):
            for position, letter in enumerate(hole):
                arcs = self.first_arcs(hole, position)
                partners = [other for other, candidate in enumerate(hole) if candidate == invert_letter(letter)]
                options = len(arcs) + len(partners)
                if best is None or options < best[0]:
                    best = (options, index, position, arcs, partners)
        if best is None:
            return
        _, index, position, arcs, partners = best
        hole = holes[index]
        for other in partners:
            first, second = sorted((position, other))
            if self.admissible(hole[first + 1:second]):
                yield Bridge(index, first, second), 0
        for relator, name, start, length in arcs:
            for gluing in self.gluings(index, hole, relator, name, [(start, length, 0)]):
                yield gluing, 1

    def run(self, start: Holes, max_area: int) -> tuple[Optional[list[Move]], int]:
        """
        Uniform-cost search over hole multisets.

        :return: moves of a least-area filling or None, and the number of states recorded.
        """
        if not all(self.admissible(hole) for hole in start):
            logger.debug("boundary has a nonzero exponent sum")
            return None, 1
        origin = _key(start)
        best: dict[Holes, tuple[int, Holes, Optional[Holes], Optional[Move]]] = {origin: (0, start, None, None)}
        queue = deque([(0, origin)])
        while queue:
            area, key = queue.popleft()
            recorded, holes, _, _ = best[key]
            if area != recorded:
                continue
            if not holes:
                logger.debug("diagram found at area %d after %d states", area, len(best))
                return _history(best, key), len(best)
            for move, cost in self.expand(holes):
                following = _successor(holes, move)
                total = area + cost
                if following and total + self.lower_bound(following) > max_area:
                    continue
                found = _key(following)
                if found in best and best[found][0] <= total:
                    continue
                best[found] = (total, following, key, move)
                if cost:
                    queue.append((total, found))
                else:
                    queue.appendleft((total, found))
        logger.debug("bound %d exhausted after %d states", max_area, len(best))
        return None, len(best)


def _history(best: dict[Holes, tuple[int, Holes, Optional[Holes], Optional[Move]]], key: Holes) -> list[Move]:
    moves = []
    _, _, parent, move = best[key]
    while parent is not None and move is not None:
        moves.append(move)
        _, _, parent, move = best[parent]
    return moves[::-1]


def _area(moves: list[Move]) -> int:
    return sum(isinstance(move, Gluing) for move in moves)


def _start(word: Word) -> Holes:
    return (word,) if word else ()


@dataclass
class _DiagramBuilder:
    """Replays moves on darts, identifying vertices and edges as the hole folds."""

    vertex_parent: dict[str, str] = field(default_factory=dict)
    edge_parent: dict[str, tuple[str, bool]] = field(default_factory=dict)
    edge_ends: dict[str, tuple[str, str, str]] = field(default_factory=dict)
    regions: list[tuple[tuple[EdgeRef, ...], str]] = field(default_factory=list)
    counter: itertools.count = field(default_factory=itertools.count)  # type: ignore[type-arg]

    def new_vertex(self) -> str:
        name = f"x{next(self.counter)}"
        self.vertex_parent[name] = name
        return name

    def new_dart(self, start: str, end: str, label: str) -> EdgeRef:
        name = f"y{next(self.counter)}"
        self.edge_parent[name] = (name, False)
        if is_positive(label):
            self.edge_ends[name] = (start, end, label)
            return EdgeRef(name, True)
        self.edge_ends[name] = (end, start, invert_letter(label))
        return EdgeRef(name, False)

    def find_vertex(self, vertex: str) -> str:
        while self.vertex_parent[vertex] != vertex:
            self.vertex_parent[vertex] = self.vertex_parent[self.vertex_parent[vertex]]
            vertex = self.vertex_parent[vertex]
        return vertex

    def canonical(self, dart: EdgeRef) -> EdgeRef:
        edge, flipped = dart.edge, False
        while self.edge_parent[edge][0] != edge:
            parent, flip = self.edge_parent[edge]
            edge, flipped = parent, flipped != flip
        return EdgeRef(edge, dart.forward != flipped)

    def label(self, dart: EdgeRef) -> str:
        letter = self.edge_ends[dart.edge][2]
        return letter if dart.forward else invert_letter(letter)

    def start(self, dart: EdgeRef) -> str:
        tail, head, _ = self.edge_ends[dart.edge]
        return self.find_vertex(tail if dart.forward else head)

    def end(self, dart: EdgeRef) -> str:
        return self.start(dart.reversed())

    def join(self, first: str, second: str) -> None:
        first, second = self.find_vertex(first), self.find_vertex(second)
        if first != second:
            self.vertex_parent[second] = first

    def fold(self, first: EdgeRef, second: EdgeRef) -> None:
        """Identify ``second`` with the reverse of ``first``."""
        self.join(self.start(first), self.end(second))
        left = self.canonical(first)
        right = self.canonical(second)
        if left.edge == right.edge:
            return
        self.edge_parent[right.edge] = (left.edge, right.forward == left.forward)

    def boundary(self, word: Word) -> list[EdgeRef]:
        if not word:
            self.new_vertex()
            return []
        corners = [self.new_vertex() for _ in word]
        return [
            self.new_dart(corners[k], corners[(k + 1) % len(word)], letter)
            for k, letter in enumerate(word)
        ]

    def interior(self, start: str, end: str, letters: Word) -> list[EdgeRef]:
        """Darts for relator letters crossing the disc from ``start`` to ``end``."""
        if not letters:
            self.join(start, end)
            return []
        stops = [start] + [self.new_vertex() for _ in letters[1:]] + [end]
        return [self.new_dart(stops[k], stops[k + 1], letter) for k, letter in enumerate(letters)]

    def glue(self, holes: list[list[EdgeRef]], move: Move) -> tuple[list[list[EdgeRef]], list[list[EdgeRef]]]:
        """
        Apply one move to the hole at ``move.hole``.

        :return: folded holes afterwards and, for a gluing, the darts created after each arc.
        """
        hole = holes[move.hole]
        created: list[list[EdgeRef]] = []
        if isinstance(move, Bridge):
            first, second = hole[move.first], hole[move.second]
            self.join(self.end(first), self.start(second))
            self.fold(first, second)
            pieces = _pieces(hole, move, _no_darts)
        else:
            layout = _layout(len(hole), move)
            region: list[EdgeRef] = []
            for index, (glued, _, free) in enumerate(layout):
                arc = [hole[position] for position in glued]
                target = hole[layout[(index + 1) % len(layout)][0][0]]
                created.append(self.interior(self.end(arc[-1]), self.start(target), free))
                region.extend(arc + created[-1])
            self.regions.append((tuple(region), move.name))
            pieces = [
                [hole[position] for position in between] + [dart.reversed() for dart in reversed(darts)]
                for (_, between, _), darts in zip(layout, created)
            ]
        folded = [_fold(piece, self.label, self.fold) for piece in pieces]
        return holes[:move.hole] + [piece for piece in folded if piece] + holes[move.hole + 1:], created

    def diagram(self, boundary: Sequence[EdgeRef], keep: Callable[[str], bool]) -> PlanarDiagram:
        """Diagram of the kept regions, with ids renumbered in order of appearance."""
        vertex_ids: dict[str, str] = {}
        edge_ids: dict[str, str] = {}
        edges: list[DiagramEdge] = []

        def dart_of(dart: EdgeRef) -> EdgeRef:
            found = self.canonical(dart)
            if found.edge not in edge_ids:
                tail, head, letter = self.edge_ends[found.edge]
                for vertex in (self.find_vertex(tail), self.find_vertex(head)):
                    vertex_ids.setdefault(vertex, f"v{len(vertex_ids)}")
                edge_ids[found.edge] = f"e{len(edge_ids)}"
                edges.append(
                    DiagramEdge(
                        id=edge_ids[found.edge],
                        tail=vertex_ids[self.find_vertex(tail)],
                        head=vertex_ids[self.find_vertex(head)],
                        letter=letter,
                    ),
                )
            return EdgeRef(edge_ids[found.edge], found.forward)

        outline = tuple(dart_of(dart) for dart in boundary)
        regions = []
        for darts, name in self.regions:
            if keep(name):
                regions.append(
                    Region(id=f"r{len(regions)}", boundary=tuple(dart_of(dart) for dart in darts), marker=name),
                )
        if not vertex_ids:
            vertex_ids["root"] = "v0"
        return PlanarDiagram(
            vertices=tuple(vertex_ids.values()),
            edges=tuple(edges),
            regions=tuple(regions),
            boundary=outline,
        )


def _keep_all(name: str) -> bool:
    return True




def _replay(boundary: Word, moves: list[Move]) -> PlanarDiagram:
    builder = _DiagramBuilder()
    outline = builder.boundary(boundary)
    hole = _fold(outline, builder.label, builder.fold)
    holes = [hole] if hole else []
    for move in moves:
        holes, _ = builder.glue(holes, move)
    return builder.diagram(outline, _keep_all)


def search_disc_diagram(boundary: Sequence[str], p: Presentation, max_area: int) -> DiagramSearchResult:
    """
    Least-area disc diagram with a given boundary word.

    :param boundary: boundary word read counterclockwise.
    :param p: presentation.
    :param max_area: largest number of regions tried.
    :return: result; ``exhausted`` is set when no diagram was found.
    """
    word = tuple(boundary)
    relators = relator_rotations([(relator, f"r{index}") for index, relator in enumerate(p.relators)])
    moves, explored = _Search(relators).run(_start(fold_word(word)), max_area)
    if moves is None:
        return DiagramSearchResult(diagram=None, area=None, explored_states=explored, exhausted=True)
    return DiagramSearchResult(
        diagram=_replay(word, moves),
        area=_area(moves),
        explored_states=explored,
        exhausted=False,
    )


def _dart_letter(ref: EdgeRef) -> str:
    return f"{ref.edge}{ref.sign}"


def _face_relators(c: ComplexSpec) -> list[tuple[Word, str]]:
    return [(tuple(_dart_letter(ref) for ref in face.boundary), face.id) for face in c.faces]


def _collar_moves(size: int, relators: list[tuple[Word, str]]) -> list[tuple[Word, str, int]]:
    """Collar regions in placement order: relator rotation, first letter it is glued at, matched length."""
    by_name = {name: word for word, name in relators}
    placements = []
    for index in range(size):
        word = by_name[f"{COLLAR_PREFIX}u{index}"]
        placements.append((word, f"{COLLAR_PREFIX}u{index}", 1))
    for index in range(size):
        word = by_name[f"{COLLAR_PREFIX}t{index}"]
        placements.append((rotate(word, 1), f"{COLLAR_PREFIX}t{index}", 2))
    return placements


def search_disc_diagram_in_complex(c: ComplexSpec, path: Sequence[EdgeRef], max_area: int) -> DiagramSearchResult:
    """
    Least-area disc diagram in a complex bounded by a closed edge path.

    A path that visits a vertex twice is first pushed off itself by an
    annulus collar; the collar regions are trimmed from the result.

    :param c: complex.
    :param path: closed edge path.
    :param max_area: largest number of regions tried, collar excluded.
    :return: result; diagram letters are edge letters such as ``e1+``.
    """
    check_closed_path(c, path)
    starts = [c.start(ref) for ref in path]
    word = tuple(_dart_letter(ref) for ref in path)
    search = _Search(relator_rotations(_face_relators(c)))
    if len(set(starts)) == len(starts):
        moves, explored = search.run(_start(fold_word(word)), max_area)
        if moves is None:
            return DiagramSearchResult(diagram=None, area=None, explored_states=explored, exhausted=True)
        return DiagramSearchResult(
            diagram=_replay(word, moves),
            area=_area(moves),
            explored_states=explored,
            exhausted=False,
        )

    annulus, copy = attach_annulus(c, path)
    collar_relators = _face_relators(annulus)
    builder = _DiagramBuilder()
    holes = [builder.boundary(tuple(_dart_letter(ref) for ref in copy))]
    inner: list[EdgeRef] = []
    for relator, name, matched in _collar_moves(len(path), collar_relators):
        labels = [builder.label(dart) for dart in holes[0]]
        gluing = Gluing(0, relator, name, ((labels.index(relator[0]), matched, 0),))
        holes, created = builder.glue(holes, gluing)
        if name.startswith(f"{COLLAR_PREFIX}t"):
            inner.extend(dart.reversed() for dart in reversed(created[0]))
    start = tuple(tuple(builder.label(dart) for dart in hole) for hole in holes)
    moves, explored = search.run(start, max_area)
    if moves is None:
        return DiagramSearchResult(diagram=None, area=None, explored_states=explored, exhausted=True, collar=True)
    for move in moves:
        holes, _ = builder.glue(holes, move)
    diagram = builder.diagram(inner, lambda name: not name.startswith(COLLAR_PREFIX))
    logger.info("collar of %d regions trimmed", 2 * len(path))
    return DiagramSearchResult(
        diagram=diagram,
        area=_area(moves),
        explored_states=explored,
        exhausted=False,
        collar=True,
    )

def dihedral_presentation(m: int) -> Presentation:
    """Dihedral Artin presentation <a, b | p(a, b) p(b, a)^-1> with alternating words of length m."""
    relator = alternating("a", "b", m) + invert_word(alternating("b", "a", m))
    return build_presentation(("a", "b"), [relator])


def _halves_on_boundary(diagram: PlanarDiagram, m: int) -> list[tuple[int, str]]:
    position_of = {dart: index for index, dart in enumerate(diagram.boundary)}
    size = len(diagram.boundary)
    found = []
    for region in diagram.regions:
        label = region_label(diagram, region)
        length = len(label)
        for start in range(length):
            if is_positive(label[start]) == is_positive(label[start - 1]):
                continue
            half = [region.boundary[(start + k) % length] for k in range(m)]
            first = position_of.get(half[0])
            if first is None:
                continue
            if all(position_of.get(dart) == (first + k) % size for k, dart in enumerate(half)):
                text = format_word([label[(start + k) % length] for k in range(m)])
                found.append((first, text))
    return sorted(set(found))


def corner_subwords(u: Sequence[str], m: int, max_area: int) -> Optional[CornerSubwords]:
    """
    Two relator halves read along the boundary of a least-area diagram for u.

    A pair whose letters lie in different syllables of the cyclic word u
    is preferred; otherwise the first pair is returned flagged as
    overlapping.

    :param u: cyclically reduced word trivial in the dihedral Artin group.
    :param m: label, at least 3.
    :param max_area: search bound.
    :raises UnknownElementError: for m below 3.
    :return: the two subwords with their positions, None when the bound is exhausted.
    """
    if m < 3:
        raise UnknownElementError("corner subwords need m >= 3")
    word = tuple(u)
    result = search_disc_diagram(word, dihedral_presentation(m), max_area)
    if result.diagram is None or result.area is None:
        return None
    candidates = _halves_on_boundary(result.diagram, m)
    if len(candidates) < 2:
        return None
    syllables = syllable_ids(word)
    size = len(word)

    def used(candidate: tuple[int, str]) -> set[int]:
        return {syllables[(candidate[0] + k) % size] for k in range(m)}

    pairs = list(itertools.combinations(candidates, 2))
    for first, second in pairs:
        if not used(first) & used(second):
            return CornerSubwords(
                first=(first[1], first[0]),
                second=(second[1], second[0]),
                overlapping=False,
                area=result.area,
            )
    first, second = pairs[0]
    return CornerSubwords(first=(first[1], first[0]), second=(second[1], second[0]), overlapping=True, area=result.area)
