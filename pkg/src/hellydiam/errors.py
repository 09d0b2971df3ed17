"""Exception types shared across the library.

Every error that certifies something carries the certificate (the offending
subset, the uncovered bodies, ...) so callers and tests can re-check it.
"""


class GeometryError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(GeometryError, ValueError):
    pass


class EmptyBody(GeometryError):
    """An operation that requires a nonempty polytope met an empty one."""


class Unbounded(GeometryError):
    """An operation that requires a bounded polytope met an unbounded one."""


class PreconditionFailed(GeometryError):
    """A stated theorem hypothesis does not hold for the given input.

    ``detail`` carries whatever makes the failure checkable (a required
    size, an offending index set, ...).
    """

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class HypothesisFailed(PreconditionFailed):
    """A Helly-style hypothesis failed; ``detail`` is the offending subset."""


class GroundSetInsufficient(GeometryError):
    """The finite candidate pool cannot cover some bodies.

    ``uncovered`` lists the body indices with no contained candidate.
    """

    def __init__(self, message, uncovered=()):
        super().__init__(message)
        self.uncovered = tuple(uncovered)


class CoverageUnverified(GeometryError):
    """A sphere-cover quality guarantee could not be certified."""


class CoverageUnverifiedWarning(UserWarning):
    """Non-fatal variant: the object is returned but flagged unverified."""


class InternalError(GeometryError):
    """A theorem guaranteed success but the search failed: implementation bug
    or a silently violated precondition."""
