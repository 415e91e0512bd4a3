"""Errors raised by the workbench.

Input errors end a command with exit code 2, computation errors
with exit code 1.
"""
from typing import Sequence


class WorkbenchError(Exception):
    """Base class for every workbench error."""

    exit_code = 2

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


class InputError(WorkbenchError):
    """The input cannot be used as given."""

    exit_code = 2


class ComputationError(WorkbenchError):
    """The input is valid but the requested construction is impossible."""

    exit_code = 1


class ScalarParseError(InputError):
    """Malformed exact scalar."""


class FileFormatError(InputError):
    """Malformed file, with the location of the problem."""

    def __init__(self, detail: str, location: str = "") -> None:
        super().__init__(f"{location}: {detail}" if location else detail)
        self.location = location


class ComplexValidationError(InputError):
    """Complex description violating the complex invariants.

    :param violations: pairs of (location, message).
    """

    def __init__(self, violations: Sequence[tuple[str, str]]) -> None:
        self.violations = tuple(violations)
        lines = "; ".join(f"{loc}: {msg}" for loc, msg in self.violations)
        super().__init__(f"invalid complex ({lines})")


class UnknownShapeError(InputError):
    """Shape name missing from the catalog."""


class UnknownElementError(InputError):
    """Unknown edge, face, vertex or report element."""


class PresentationError(InputError):
    """Presentation with letters outside its alphabet or unreduced relators."""


class SubdivisionError(InputError):
    """Subdivision mode not applicable to some face."""


class OddFaceError(InputError):
    """Hypergraph tracing reached a face with an odd number of sides."""


class NotDihedralRelatorError(InputError):
    """Region label is not a dihedral relator."""


class BlockError(InputError):
    """Word cannot be factored into blocks of the labeled graph."""


class ProbeError(InputError):
    """Wall probe called on faces or walls that do not fit."""


class VertexHitError(ComputationError):
    """A chord runs into a vertex of its polygon."""


class ConditionViolatedError(ComputationError):
    """A recurrence condition required by the construction fails."""


class NoThickBaseError(ComputationError):
    """The complex has no edge of degree at least 3."""


class NotRecurrentError(ComputationError):
    """No cycle of the transition digraph runs through the requested arc."""


class CertificationError(ComputationError):
    """The dumbbell certificate cannot be assembled."""


class SphereConingError(ComputationError):
    """A sphere component shares an edge with the rest of the complex."""


class ElementCapExceeded(ComputationError):
    """A Cayley ball grew beyond the element cap."""


class CollapseConfluenceError(ComputationError):
    """Collapsing in opposite edge orders gave different results."""
