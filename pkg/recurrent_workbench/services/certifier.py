"""
Dumbbell certificates built from recurrent token cycles.

Three perpendicular directions v1, v2, v3 at a point of a thick edge
give three closed token paths through that point:
v2 back to the class of v1, v3 back to v1 and v3 back to v2.
"""
import logging
from typing import Optional

from recurrent_workbench.exceptions import (
    ConditionViolatedError,
    NoThickBaseError,
    UnknownElementError,
    UnknownShapeError,
    VertexHitError,
)
from recurrent_workbench.models.certificate import (
    CertificateChord,
    CertificatePath,
    CertificateVerdict,
    DumbbellCertificate,
    ThickBase,
)
from recurrent_workbench.models.complex import ComplexSpec
from recurrent_workbench.models.recurrence import DirectionToken
from recurrent_workbench.services.complexes import edge_degree, face_scale
from recurrent_workbench.services.quadratic import ZERO, QuadNumber
from recurrent_workbench.services.recurrence import (
    build_markov,
    continuations_of,
    find_recurrent_cycle,
    instantiate_directions,
    involution_of,
    token_to_anchor,
)
from recurrent_workbench.services.shapes import chord

logger = logging.getLogger(__name__)

# path name, index of the starting direction, index of the terminal class
PATH_PLAN = (
    ("v2-to-v1", 1, 0),
    ("v3-to-v1", 2, 0),
    ("v3-to-v2", 2, 1),
)


def find_thick_base(c: ComplexSpec) -> Optional[ThickBase]:
    """
    Least thick edge and least point on it with three perpendicular tokens.

    :param c: shaped complex.
    :raises ConditionViolatedError: when no thick edge has such a point.
    :return: base, or None when no edge has degree 3 or more.
    """
    thick = sorted(edge.id for edge in c.edges if edge_degree(c, edge.id) >= 3)
    if not thick:
        return None
    perpendicular: dict[tuple[str, QuadNumber], list[DirectionToken]] = {}
    for token in instantiate_directions(c):
        if token.is_perpendicular:
            perpendicular.setdefault((token.edge, token.t), []).append(token)
    for edge in thick:
        for t in sorted(t for name, t in perpendicular if name == edge):
            tokens = sorted(perpendicular[(edge, t)], key=lambda token: (token.face, token.position))
            if len(tokens) >= 3:
                return ThickBase(edge=edge, t=t, directions=(tokens[0], tokens[1], tokens[2]))
    raise ConditionViolatedError("condition (iv) violated")


def _chords(c: ComplexSpec, tokens: tuple[DirectionToken, ...]) -> tuple[CertificateChord, ...]:
    chords = []
    for token in tokens:
        shape, anchor = token_to_anchor(c, token)
        segment = chord(shape, anchor)
        chords.append(
            CertificateChord(
                face=token.face,
                start=shape.anchor_point(segment.start),
                end=shape.anchor_point(segment.end),
                length=segment.length * face_scale(c, c.face_map[token.face]),
            ),
        )
    return tuple(chords)


def _path(c: ComplexSpec, name: str, cycle: list[DirectionToken]) -> CertificatePath:
    tokens = tuple(cycle[1:])
    chords = _chords(c, tokens)
    total = ZERO
    for segment in chords:
        total = total + segment.length
    return CertificatePath(name=name, tokens=tokens, chords=chords, length=total)


def build_dumbbell(c: ComplexSpec) -> DumbbellCertificate:
    """
    Assemble the dumbbell certificate of a thick complex.

    :param c: shaped complex.
    :raises NoThickBaseError: when the complex has no thick edge.
    :raises NotRecurrentError: when a required arc lies on no cycle.
    :return: certificate.
    """
    base = find_thick_base(c)
    if base is None:
        raise NoThickBaseError("no thick base")
    digraph = build_markov(c)
    paths = []
    for name, start, terminal in PATH_PLAN:
        cycle = find_recurrent_cycle(digraph, base.directions[terminal], base.directions[start])
        paths.append(_path(c, name, cycle))
        logger.debug("path %s: %d chords", name, len(cycle) - 1)
    logger.info("dumbbell on edge %s at t=%s", base.edge, base.t)
    return DumbbellCertificate(base_edge=base.edge, t=base.t, directions=base.directions, paths=tuple(paths))


def _check_base(c: ComplexSpec, cert: DumbbellCertificate, directions: set[DirectionToken]) -> list[tuple[str, str]]:
    violations = []
    if cert.base_edge not in c.edge_map or edge_degree(c, cert.base_edge) < 3:
        violations.append(("base", f"edge {cert.base_edge!r} is not a thick edge"))
    for token in cert.directions:
        on_base = token.edge == cert.base_edge and token.t == cert.t
        if not on_base or not token.is_perpendicular or token not in directions:
            violations.append(("base", f"{token.label()} is not perpendicular at the base point"))
    traversals = {(token.face, token.position) for token in cert.directions}
    if len(traversals) != 3:
        violations.append(("distinct classes", "base directions share a face traversal"))
    return violations


def _check_path(  # noqa: C901
    c: ComplexSpec,
    cert: DumbbellCertificate,
    path: CertificatePath,
    plan: tuple[str, int, int],
    directions: set[DirectionToken],
) -> list[tuple[str, str]]:
    name, start, terminal = plan
    violations = []
    if not path.tokens or path.tokens[0] != cert.directions[start]:
        violations.append(("base", f"{name}: does not leave along v{start + 1}"))
    if len(path.chords) != len(path.tokens):
        violations.append(("chord geometry", f"{name}: chord count differs from token count"))
    images: list[Optional[DirectionToken]] = []
    for position, token in enumerate(path.tokens):
        try:
            images.append(involution_of(c, token))
        except VertexHitError:
            images.append(None)
            violations.append(("vertex avoidance", f"{name}: chord {position} meets a vertex"))
        except (UnknownElementError, UnknownShapeError) as exc:
            images.append(None)
            violations.append(("chord geometry", f"{name}: chord {position}: {exc.detail}"))
    for position, (previous, token) in enumerate(zip(path.tokens, path.tokens[1:])):
        image = images[position]
        if token not in directions or image is None or token not in continuations_of(c, image):
            violations.append(("junction not geodesic", f"{name}: junction {position + 1} after {previous.label()}"))
    if path.tokens and len(path.chords) == len(path.tokens):
        for position, recorded in enumerate(path.chords):
            if images[position] is None:
                continue
            expected = _chords(c, (path.tokens[position],))[0]
            if expected != recorded:
                violations.append(("chord geometry", f"{name}: chord {position} differs from its token"))
    final = images[-1] if images else None
    if final is None or final != cert.directions[terminal]:
        violations.append(("terminal direction", f"{name}: does not return along v{terminal + 1}"))
    total = ZERO
    for recorded in path.chords:
        total = total + recorded.length
    if total != path.length:
        violations.append(("length mismatch", f"{name}: chord lengths do not add up"))
    return violations


def verify_certificate(c: ComplexSpec, cert: DumbbellCertificate) -> CertificateVerdict:
    """
    Re-check a certificate against its complex.

    :param c: shaped complex.
    :param cert: certificate to check.
    :return: verdict naming every violated clause.
    """
    directions = set(instantiate_directions(c))
    violations = _check_base(c, cert, directions)
    if len(cert.paths) != len(PATH_PLAN):
        violations.append(("base", f"expected {len(PATH_PLAN)} paths, found {len(cert.paths)}"))
    for path, plan in zip(cert.paths, PATH_PLAN):
        violations.extend(_check_path(c, cert, path, plan, directions))
    if violations:
        logger.info("certificate rejected: %s", sorted({clause for clause, _ in violations}))
    return CertificateVerdict(violations=tuple(violations))
