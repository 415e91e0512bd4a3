"""Dumbbell certificates for free subgroups."""
from dataclasses import dataclass

from recurrent_workbench.models.recurrence import DirectionToken
from recurrent_workbench.services.planar import Vec
from recurrent_workbench.services.quadratic import QuadNumber


@dataclass(frozen=True)
class ThickBase:
    """Edge of degree at least 3 with three perpendicular tokens at one point."""

    edge: str
    t: QuadNumber
    directions: tuple[DirectionToken, DirectionToken, DirectionToken]


@dataclass(frozen=True)
class CertificateChord:
    """Chord of a certificate path; points are in the face's shape coordinates."""

    face: str
    start: Vec
    end: Vec
    length: QuadNumber


@dataclass(frozen=True)
class CertificatePath:
    """
    Token path leaving the base point along its first token.

    ``tokens[k]`` starts ``chords[k]``; the path returns to the base
    point with direction I(tokens[-1]).
    """

    name: str
    tokens: tuple[DirectionToken, ...]
    chords: tuple[CertificateChord, ...]
    length: QuadNumber


@dataclass(frozen=True)
class DumbbellCertificate:
    base_edge: str
    t: QuadNumber
    directions: tuple[DirectionToken, DirectionToken, DirectionToken]
    paths: tuple[CertificatePath, ...]


@dataclass(frozen=True)
class CertificateVerdict:
    violations: tuple[tuple[str, str], ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def clauses(self) -> frozenset[str]:
        return frozenset(clause for clause, _ in self.violations)
