"""Exception hierarchy.

Precondition failures derive from :class:`PreconditionError`; the command
line maps them to exit code 3. :class:`InvariantViolation` signals a bug.
"""


class PlaneDomError(Exception):
    """Base class for every error raised by the package."""


class PreconditionError(PlaneDomError):
    """The input does not satisfy the documented precondition."""


class MalformedRotation(PreconditionError):
    """Rotation system is not a valid dart permutation family or not planar."""


class NotBiconnected(PreconditionError):
    pass


class BigonPresent(PreconditionError):
    pass


class EdgeNotOnFace(PreconditionError):
    pass


class OddCycleUnfixable(PreconditionError):
    """Odd cycles of length at least 5 always keep one vertex unhappy."""


class NotCubic(PreconditionError):
    pass


class NotBridgeless(PreconditionError):
    pass


class NotTriangulated(PreconditionError):
    pass


class HasLoop(PreconditionError):
    pass


class Disconnected(PreconditionError):
    pass


class TooSmall(PreconditionError):
    pass


class IsolatedVertex(PreconditionError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is isolated")
        self.vertex = vertex


class StrictModeViolation(PreconditionError):
    def __init__(self, face: int, degree: int):
        super().__init__(f"face {face} has degree {degree} <= 2 (strict mode)")
        self.face = face
        self.degree = degree


class InvariantViolation(PlaneDomError):
    """An internal invariant failed; always a bug, never bad input."""


class FormatError(PlaneDomError):
    """A document could not be parsed or does not match its schema."""


class BadReferenceEdge(PreconditionError, ValueError):
    """The requested reference edge does not exist or is a loop."""
