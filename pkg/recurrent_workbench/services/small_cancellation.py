"""
Pieces and the small-cancellation conditions C(n), T(n) and B(6).
"""
import logging
import re
from functools import lru_cache
from typing import Optional

import networkx as nx

from recurrent_workbench.exceptions import PresentationError
from recurrent_workbench.models.diagram import PieceTable, Presentation, SmallCancellationVerdict
from recurrent_workbench.services.words import (
    Word,
    format_word,
    generator_of,
    invert_letter,
    invert_word,
    rotate,
    symmetrize,
)

logger = logging.getLogger(__name__)

PIECE_MODES = ("standard", "block")
_CONDITION = re.compile(r"(C|T)\((\d+)\)|B6|B\(6\)")

# (relator index, inverted, offset)
Occurrence = tuple[int, bool, int]


def _occurrences(p: Presentation) -> list[tuple[Occurrence, Word]]:
    found = []
    for index, relator in enumerate(p.relators):
        for inverted, word in ((False, relator), (True, invert_word(relator))):
            for offset in range(len(word)):
                found.append(((index, inverted, offset), rotate(word, offset)))
    return found


def _common_prefix(first: Word, second: Word) -> int:
    length = 0
    for left, right in zip(first, second):
        if left != right:
            break
        length += 1
    return length


def _support(word: Word) -> frozenset[str]:
    return frozenset(generator_of(letter) for letter in word)


def _shared_length(p: Presentation, mode: str, first: tuple[Occurrence, Word], second: tuple[Occurrence, Word]) -> int:
    (first_index, _, _), first_word = first
    (second_index, _, _), second_word = second
    if first[0] == second[0]:
        return 0
    if mode == "block":
        if _support(p.relators[first_index]) == _support(p.relators[second_index]):
            return 0
    length = _common_prefix(first_word, second_word)
    if first_index == second_index:
        length = min(length, len(first_word) - 1)
    return length


def compute_pieces(p: Presentation, mode: str = "standard") -> PieceTable:
    """
    Pieces of the symmetrized presentation.

    In ``block`` mode only words shared by relators over different
    generator sets count as pieces.

    :param p: presentation with cyclically reduced relators.
    :param mode: "standard" or "block".
    :raises PresentationError: for an unknown mode.
    :return: piece table.
    """
    if mode not in PIECE_MODES:
        raise PresentationError(f"unknown piece mode {mode!r}")
    occurrences = _occurrences(p)
    pieces: set[Word] = set()
    maxima: dict[Occurrence, int] = {}
    for first in occurrences:
        best = 0
        for second in occurrences:
            length = _shared_length(p, mode, first, second)
            for size in range(1, length + 1):
                pieces.add(first[1][:size])
            best = max(best, length)
        maxima[first[0]] = best
    max_pieces = tuple(
        tuple(maxima[(index, False, offset)] for offset in range(len(relator)))
        for index, relator in enumerate(p.relators)
    )
    logger.debug("%s pieces: %d distinct", mode, len(pieces))
    return PieceTable(mode=mode, pieces=frozenset(pieces), max_pieces=max_pieces)


def _min_cover(relator: Word, max_piece: tuple[int, ...]) -> Optional[list[Word]]:
    """Fewest pieces whose concatenation is a cyclic shift of the relator."""
    size = len(relator)
    best: Optional[list[Word]] = None
    for start in range(size):
        covered = 0
        used: list[Word] = []
        while covered < size:
            position = (start + covered) % size
            step = min(max_piece[position], size - covered)
            if step == 0:
                break
            used.append(rotate(relator, position)[:step])
            covered += step
        if covered < size:
            continue
        if best is None or len(used) < len(best):
            best = used
    return best


def _longest_chain(relator: Word, max_piece: tuple[int, ...], start: int) -> list[Word]:
    """Longest concatenation of at most 3 pieces read from ``start``."""
    size = len(relator)

    @lru_cache(maxsize=None)
    def reach(covered: int, left: int) -> tuple[int, tuple[int, ...]]:
        if left == 0 or covered >= size:
            return 0, ()
        limit = min(max_piece[(start + covered) % size], size - covered)
        best: tuple[int, tuple[int, ...]] = (0, ())
        for step in range(1, limit + 1):
            span, steps = reach(covered + step, left - 1)
            if step + span > best[0]:
                best = (step + span, (step,) + steps)
        return best

    _, steps = reach(0, 3)
    chain = []
    covered = 0
    for step in steps:
        chain.append(rotate(relator, start + covered)[:step])
        covered += step
    return chain


def link_graph(p: Presentation) -> nx.Graph:
    """
    Link of the presentation complex's vertex.

    One edge joins inv(r[i]) and r[i + 1] for every corner of every
    symmetrized relator.

    :param p: presentation.
    :return: simple graph on letters.
    """
    graph = nx.Graph()
    for generator in p.generators:
        graph.add_nodes_from((generator, invert_letter(generator)))
    for word in symmetrize(p.relators):
        for position, letter in enumerate(word):
            following = word[(position + 1) % len(word)]
            graph.add_edge(invert_letter(letter), following)
    return graph


def short_cycle(graph: nx.Graph, bound: int) -> Optional[list[str]]:
    """
    Simple cycle with 3 to ``bound - 1`` vertices.

    :param graph: simple graph.
    :param bound: exclusive length bound.
    :return: cycle vertices, or None.
    """
    order = sorted(graph.nodes)
    rank = {node: position for position, node in enumerate(order)}
    for origin in order:
        stack = [(origin, [origin])]
        while stack:
            node, path = stack.pop()
            for neighbour in sorted(graph.neighbors(node), reverse=True):
                if neighbour == origin and len(path) >= 3:
                    return path
                if rank[neighbour] <= rank[origin] or neighbour in path:
                    continue
                if len(path) + 1 < bound:
                    stack.append((neighbour, path + [neighbour]))
    return None


def check_small_cancellation(p: Presentation, which: str, mode: str = "standard") -> SmallCancellationVerdict:
    """
    Check C(n), T(n) or B(6).

    :param p: presentation.
    :param which: "C(n)", "T(n)" or "B6".
    :param mode: piece mode for C(n) and B(6).
    :raises PresentationError: for an unknown condition.
    :return: verdict, with a witness when the condition fails.
    """
    match = _CONDITION.fullmatch(which.replace(" ", ""))
    if match is None:
        raise PresentationError(f"unknown condition {which!r}")
    if match.group(1) == "T":
        bound = int(match.group(2))
        cycle = short_cycle(link_graph(p), bound)
        witness = None if cycle is None else "link cycle " + "-".join(cycle)
        return SmallCancellationVerdict(condition=f"T({bound})", holds=cycle is None, witness=witness)

    table = compute_pieces(p, mode)
    if match.group(1) == "C":
        bound = int(match.group(2))
        for relator, max_piece in zip(p.relators, table.max_pieces):
            cover = _min_cover(relator, max_piece)
            if cover is not None and len(cover) < bound:
                witness = f"{format_word(relator)} = " + " . ".join(format_word(piece) for piece in cover)
                return SmallCancellationVerdict(condition=f"C({bound})", holds=False, witness=witness)
        return SmallCancellationVerdict(condition=f"C({bound})", holds=True)

    for relator, max_piece in zip(p.relators, table.max_pieces):
        for start in range(len(relator)):
            chain = _longest_chain(relator, max_piece, start)
            span = sum(len(piece) for piece in chain)
            if 2 * span > len(relator):
                pieces = " . ".join(format_word(piece) for piece in chain)
                witness = f"{format_word(relator)} at {start}: {pieces} has length {span} > {len(relator)}/2"
                return SmallCancellationVerdict(condition="B6", holds=False, witness=witness)
    return SmallCancellationVerdict(condition="B6", holds=True)
