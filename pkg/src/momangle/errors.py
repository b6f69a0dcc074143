"""Exception types shared across the package.

Everything user-facing derives from :class:`MomangleError` so the CLI can
map failures onto stable exit codes (input errors vs. resource caps vs.
internal invariant violations).
"""


class MomangleError(Exception):
    """Base class for all package errors."""


class InputError(MomangleError):
    """Bad user input: malformed complexes, labels, parameters."""


class GhostVertex(InputError):
    """A vertex in 1..m appears in no facet."""


class OutOfRange(InputError):
    """A vertex label falls outside 1..m."""


class NotAFace(InputError):
    """A subset was required to be a face of the complex but is not."""


class BadParams(InputError):
    """Invalid parameters for a generator family."""


class EmptySubset(InputError):
    """An operation required a nonempty vertex subset."""


class ParseError(InputError):
    """Malformed JSON input; carries line/column where available."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class NotAField(InputError):
    """Coefficients do not name a field (or the prime is invalid)."""


class FieldMismatch(InputError):
    """Two objects carry different coefficient fields."""


class TooManyVertices(MomangleError):
    """A resource cap on the vertex count was exceeded."""

    def __init__(self, message, m=None, cap=None):
        super().__init__(message)
        self.m = m
        self.cap = cap


class InternalInvariant(MomangleError):
    """An internal consistency check failed; indicates a bug."""
