"""Exception hierarchy shared by every module."""


class GpgError(Exception):
    """Base class for all library errors."""


class ParameterError(GpgError, ValueError):
    """Invalid construction parameters (n, k, ranges, flags)."""


class ResourceCapError(GpgError):
    """A configured size or count bound would be exceeded."""


class CycleCapError(ResourceCapError):
    pass


class SizeBoundError(ResourceCapError):
    pass


class DisconnectedGraphError(GpgError, ValueError):
    pass


class IdenticalEdgeError(GpgError, ValueError):
    pass


class WidthMismatchError(GpgError, ValueError):
    pass


class GraphMismatchError(GpgError, ValueError):
    pass


class ForeignCycleError(GpgError, ValueError):
    pass


class NotAutomorphismError(GpgError, ValueError):
    pass


class SignatureParseError(GpgError, ValueError):
    """Raised by the signature text parser; carries the offending position."""

    def __init__(self, message, token=None, position=None):
        self.token = token
        self.position = position
        if position is not None:
            message = f"{message} (token {token!r} at offset {position})"
        super().__init__(message)


class InternalConsistencyError(GpgError, AssertionError):
    """Two independent computations of the same quantity disagree."""
