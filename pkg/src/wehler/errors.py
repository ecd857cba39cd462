"""Exception types shared across the package.

The distinction that matters downstream: `UsageError` means the caller handed
us something malformed (bad file, bad flag value), while the subclasses of
`MathematicalInconsistencyError` mean the inputs were well-formed but the
mathematics refused them (degenerate surface, impossible count vector, point
not where it was claimed to be). The CLI maps the two groups to different
exit codes.
"""


class UsageError(Exception):
    """Malformed input: unparseable file, wrong arity, invalid option value."""


class MathematicalInconsistencyError(Exception):
    """Well-formed input that is mathematically unacceptable."""


class DegenerateSurfaceError(MathematicalInconsistencyError):
    """A positive-dimensional fiber was found where none is allowed."""

    def __init__(self, message, side=None, base=None):
        super().__init__(message)
        self.side = side
        self.base = base


class DegenerateFiberError(DegenerateSurfaceError):
    """The specific fiber needed for an involution step is degenerate."""


class BadReductionError(MathematicalInconsistencyError):
    """Reduction mod p collapsed a coefficient vector to zero."""


class PointNotOnSurfaceError(MathematicalInconsistencyError):
    """An operation required a surface point and got something else."""


class InconsistentDataError(MathematicalInconsistencyError):
    """Derived data violates an identity it must satisfy (corrupt counts etc.)."""
