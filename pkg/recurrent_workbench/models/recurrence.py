"""Direction tokens, the transition digraph and recurrence reports."""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

import networkx as nx

from recurrent_workbench.services.quadratic import QuadNumber, format_scalar


@dataclass(frozen=True)
class DirectionToken:
    """
    Inward direction at a point of a face side.

    ``t`` is measured along the edge from its tail. ``alpha`` is the
    component of the direction along the edge (tail to head) and ``beta``
    the component along the inward normal of the face side.
    """

    face: str
    position: int
    edge: str
    forward: bool
    t: QuadNumber
    alpha: QuadNumber
    beta: QuadNumber

    def sort_key(self) -> tuple[str, int, QuadNumber, QuadNumber, QuadNumber]:
        return (self.face, self.position, self.t, self.alpha, self.beta)

    @property
    def is_perpendicular(self) -> bool:
        return not self.alpha

    def label(self) -> str:
        sign = "+" if self.forward else "-"
        return (
            f"{self.face}/{self.edge}{sign}@{format_scalar(self.t)}"
            f"<{format_scalar(self.alpha)},{format_scalar(self.beta)}>"
        )


@dataclass(frozen=True)
class TransitionDigraph:
    """
    Markov transition digraph on the direction set.

    ``arcs`` holds (source index, target index, probability) with
    target in H(I(source)); ``involution[i]`` is the index of I(nodes[i]).
    """

    nodes: tuple[DirectionToken, ...]
    arcs: tuple[tuple[int, int, Fraction], ...]
    involution: tuple[int, ...]
    dead_ends: tuple[int, ...] = ()

    @cached_property
    def index(self) -> dict[DirectionToken, int]:
        return {token: position for position, token in enumerate(self.nodes)}

    @cached_property
    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.nodes)))
        for source, target, probability in self.arcs:
            graph.add_edge(source, target, probability=probability)
        return graph

    @cached_property
    def row_sums(self) -> tuple[Fraction, ...]:
        sums = [Fraction(0)] * len(self.nodes)
        for source, _, probability in self.arcs:
            sums[source] += probability
        return tuple(sums)

    @cached_property
    def column_sums(self) -> tuple[Fraction, ...]:
        sums = [Fraction(0)] * len(self.nodes)
        for _, target, probability in self.arcs:
            sums[target] += probability
        return tuple(sums)

    def has_arc(self, source: DirectionToken, target: DirectionToken) -> bool:
        if source not in self.index or target not in self.index:
            return False
        return self.graph.has_edge(self.index[source], self.index[target])

    def without_arc(self, source: DirectionToken, target: DirectionToken) -> "TransitionDigraph":
        """
        Copy of the digraph with one arc deleted.

        :param source: arc source.
        :param target: arc target.
        :return: new digraph.
        """
        pair = (self.index[source], self.index[target])
        return TransitionDigraph(
            nodes=self.nodes,
            arcs=tuple(arc for arc in self.arcs if arc[:2] != pair),
            involution=self.involution,
            dead_ends=self.dead_ends,
        )


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of one recurrence condition; ``passed`` is None when not evaluated."""

    name: str
    passed: Optional[bool]
    detail: str = ""
    offenders: tuple[str, ...] = ()


@dataclass(frozen=True)
class RecurrenceReport:
    token_count: int
    face_counts: dict[str, int]
    conditions: tuple[ConditionVerdict, ...]
    acyclic: Optional[bool]
    returns_to_involution: Optional[bool]
    b0: int
    b1: int
    simply_connected_asserted: bool
    warnings: tuple[str, ...] = field(default=())

    def condition(self, name: str) -> ConditionVerdict:
        for verdict in self.conditions:
            if verdict.name == name:
                return verdict
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(verdict.passed is not False for verdict in self.conditions)
